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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinjoint/qubit.hpp"

namespace spinjoint {

/// Validation tolerance for POVMs assembled from user-supplied floats.
inline constexpr double kPovmTol = 1e-10;

struct Effect {
  std::string label;
  ComplexMatrix2 op;
};

/// An ordered, labeled list of single-qubit effects. Holding a Povm says
/// nothing about validity; run `validate` (operations that need a valid
/// measurement do this themselves and throw InvalidPovm).
class Povm {
 public:
  Povm() = default;
  explicit Povm(std::vector<Effect> effects) : effects_(std::move(effects)) {}

  const std::vector<Effect>& effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }
  const Effect& operator[](std::size_t i) const { return effects_[i]; }
  auto begin() const { return effects_.begin(); }
  auto end() const { return effects_.end(); }

  /// Effect operator by label; throws InvalidArgument when absent.
  const ComplexMatrix2& op(std::string_view label) const;
  ComplexMatrix2 sum() const;

 private:
  std::vector<Effect> effects_;
};

struct EffectCheck {
  std::string label;
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

struct ValidationReport {
  std::vector<EffectCheck> effects;
  double min_eigenvalue = 0.0;
  /// max |(Σ Π) - 1| entrywise.
  double completeness_defect = 0.0;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Positivity (every eigenvalue ≥ -tol), Hermiticity and completeness
/// (defect ≤ tol). Never throws; the report carries the failures.
ValidationReport validate(const Povm& povm, double tol = kPovmTol);

/// Throws InvalidPovm with the report's failures if validation fails.
void require_valid(const Povm& povm, double tol = kPovmTol);

/// {½(1 + a·σ), ½(1 - a·σ)} labeled "+", "-".
Povm projective_povm(const UnitVector3& a);

struct OutcomeProbability {
  std::string label;
  double probability = 0.0;
  /// True when a slightly negative Born value was clamped to zero.
  bool clamped = false;
};

/// Tr(Π_i ρ) for every effect, in POVM order.
std::vector<OutcomeProbability> outcome_probabilities(const Povm& povm, const QubitState& state,
                                                      double tol = kPovmTol);

/// Entry (i, j) = Re Tr[(Π_i ⊗ Π'_j) ρ]. Rows follow `first`, columns `second`.
/// Values are raw Born numbers (no clamping).
Eigen::MatrixXd two_party_probabilities(const Povm& first, const Povm& second,
                                        const TwoQubitState& state, double tol = kPovmTol);

/// Sums effects that map to the same new label; output keeps first-seen order.
Povm coarse_grain(const Povm& povm, const std::function<std::string(const std::string&)>& relabel);

}  // namespace spinjoint
