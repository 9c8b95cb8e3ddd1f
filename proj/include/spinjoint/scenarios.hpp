// Copyright 2026 The spinjoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numbers>

#include "spinjoint/sampler.hpp"

namespace spinjoint {

/// Bloch-vector shrink factor of the optimal universal 1 -> 2 cloner.
inline constexpr double kOptimalClonerEta = 2.0 / 3.0;

/// Joint measurement built by cloning and measuring a on one copy, a' on the
/// other: both sharpness factors equal the cloner's shrink factor eta.
struct CloningScenario {
  double eta = 0.0;
  double theta = 0.0;
  double alpha_clone = 0.0;
  double alpha_optimal = 0.0;
  double gap = 0.0;  ///< alpha_optimal - alpha_clone
};

/// Throws EtaOutOfRange unless eta ∈ (0, 2/3], InvalidArgument unless θ ∈ [0, π].
CloningScenario cloning_joint(double theta, double eta = kOptimalClonerEta);

struct CloningGapScan {
  std::size_t points = 0;
  double min_gap = 0.0;
  double theta_at_min = 0.0;
};

/// Smallest gap over an evenly spaced grid of `points` angles on [0, π].
CloningGapScan cloning_min_gap(double eta, std::size_t points = 181);

/// An eavesdropper holding one BB84 qubit runs the optimal symmetric joint
/// measurement of the two basis observables and, once the basis is announced,
/// keeps the matching half of the outcome.
///
/// Polarization bases 45° apart in physical space are 90° apart on the Bloch
/// sphere, so the protocol's own geometry is theta = π/2; other angles are a
/// sensitivity study. Bases are a = z and a' = cos θ z + sin θ x.
struct Bb84EveReport {
  double theta = 0.0;
  double alpha = 0.0;
  double guess_success_prob_after_announcement = 0.0;  ///< (1 + α)/2
  double empirical_success = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;  ///< 4n
  SeededStream stream;
};

/// Runs 4n trials, each on a uniformly random (basis, bit) eigenstate.
Bb84EveReport bb84_eve(std::uint64_t n, const SeededStream& stream,
                       double theta = std::numbers::pi / 2, unsigned workers = 1);

}  // namespace spinjoint
