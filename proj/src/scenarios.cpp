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

#include "spinjoint/scenarios.hpp"

#include <cmath>
#include <limits>

namespace spinjoint {

CloningScenario cloning_joint(double theta, double eta) {
  if (!(eta > 0.0 && eta <= kOptimalClonerEta + kExactTol)) {
    throw Error(Errc::EtaOutOfRange, "universal cloner shrink factor must lie in (0, 2/3]", eta);
  }
  CloningScenario s;
  s.eta = eta;
  s.theta = theta;
  s.alpha_clone = eta;
  s.alpha_optimal = max_symmetric_alpha(theta);
  s.gap = s.alpha_optimal - s.alpha_clone;
  return s;
}

CloningGapScan cloning_min_gap(double eta, std::size_t points) {
  if (points < 2) throw Error(Errc::InvalidArgument, "grid needs at least two points");
  CloningGapScan scan;
  scan.points = points;
  scan.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(points - 1);
    const auto s = cloning_joint(theta, eta);
    if (s.gap < scan.min_gap) {
      scan.min_gap = s.gap;
      scan.theta_at_min = theta;
    }
  }
  return scan;
}

Bb84EveReport bb84_eve(std::uint64_t n, const SeededStream& stream, double theta,
                       unsigned workers) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be at least 1");
  const UnitVector3 a = UnitVector3::z();
  const UnitVector3 a_prime = UnitVector3::normalized(
      Vector3(std::sin(theta), 0.0, std::cos(theta)));
  const JointSpec spec = JointSpec::optimal_symmetric(a, a_prime);
  const Povm povm = optimal_joint_povm(spec);

  Bb84EveReport r;
  r.theta = theta;
  r.alpha = spec.alpha();
  r.guess_success_prob_after_announcement = (1.0 + spec.alpha()) / 2.0;
  r.trials = 4 * n;
  r.stream = stream;

  // How many of the 4n trials land on each (basis, bit) preparation.
  const auto prepared = draw_counts({0.25, 0.25, 0.25, 0.25}, r.trials, stream.fork(0), workers);

  std::uint64_t successes = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (prepared[k] == 0) continue;
    const std::size_t basis = k / 2;  // 0: a, 1: a'
    const int bit = (k % 2 == 0) ? 1 : -1;
    const UnitVector3& axis = basis == 0 ? a : a_prime;
    const QubitState state = QubitState::from_bloch(bit * axis.vec());
    const auto stats = sample_povm(povm, state, prepared[k], stream.fork(k + 1), workers);
    for (const auto& lc : stats.counts) {
      if (outcome_value(lc.label, basis) == bit) successes += lc.count;
    }
  }
  const double trials = static_cast<double>(r.trials);
  r.empirical_success = static_cast<double>(successes) / trials;
  r.std_error = std::sqrt(r.empirical_success * (1.0 - r.empirical_success) / trials);
  return r;
}

}  // namespace spinjoint
