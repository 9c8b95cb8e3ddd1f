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

// Joint (unsharp) measurement of two spin components a·σ and a'·σ with
// sharpness factors alpha, alpha'. The outcome alphabet is "++", "--", "+-",
// "-+"; the first character is the result for a, the second for a'.

#include <array>
#include <optional>
#include <string_view>

#include "spinjoint/povm.hpp"
#include "spinjoint/qubit.hpp"

namespace spinjoint {

/// Shared by every admissibility predicate so that the parallelogram form,
/// the quadratic form and effect positivity cannot disagree on a boundary case.
inline constexpr double kAdmissibilityTol = 1e-10;

inline constexpr std::array<std::string_view, 4> kJointLabels = {"++", "--", "+-", "-+"};

/// ±1 value read from one slot of a joint label ("+-" -> slot 0: +1, slot 1: -1).
int outcome_value(std::string_view label, std::size_t slot);

class JointSpec {
 public:
  /// Throws InvalidSpec if |alpha| or |alpha'| exceeds 1, or if `theta` is
  /// given and disagrees with a·a'. The stored angle is always recomputed.
  JointSpec(const UnitVector3& a, const UnitVector3& a_prime, double alpha, double alpha_prime,
            std::optional<double> theta = std::nullopt);

  /// alpha = alpha' = max_symmetric_alpha(theta).
  static JointSpec optimal_symmetric(const UnitVector3& a, const UnitVector3& a_prime);

  const UnitVector3& a() const { return a_; }
  const UnitVector3& a_prime() const { return a_prime_; }
  double alpha() const { return alpha_; }
  double alpha_prime() const { return alpha_prime_; }
  double theta() const { return theta_; }
  double cos_theta() const { return a_.dot(a_prime_); }

  /// alpha·a + alpha'·a'
  Vector3 sum() const { return alpha_ * a_.vec() + alpha_prime_ * a_prime_.vec(); }
  /// alpha·a - alpha'·a'
  Vector3 difference() const { return alpha_ * a_.vec() - alpha_prime_ * a_prime_.vec(); }

 private:
  UnitVector3 a_;
  UnitVector3 a_prime_;
  double alpha_;
  double alpha_prime_;
  double theta_;
};

/// |αa + α'a'| + |αa - α'a'|: the sum of the parallelogram diagonals.
/// Admissible iff ≤ 2.
double bound_lhs(const JointSpec& spec);

/// α² + α'² - α²α'²cos²θ. Admissible iff ≤ 1.
double product_form_check(const JointSpec& spec);

bool is_admissible(const JointSpec& spec, double tol = kAdmissibilityTol);
bool saturates(const JointSpec& spec, double tol = kAdmissibilityTol);

/// Largest common sharpness α = α' allowed at angle θ ∈ [0, π]:
/// 1/sqrt(1 + |sin θ|).
double max_symmetric_alpha(double theta);

/// Four-outcome optimal measurement, weights ¼|αa ± α'a'|. Complete only at
/// saturation, so anything else throws NotSaturating.
Povm optimal_joint_povm(const JointSpec& spec, double tol = kAdmissibilityTol);

/// Effects ¼(1 ± αα' a·a')1 ± ¼(αa ± α'a')·σ without any admissibility check.
/// Useful for probing positivity directly.
Povm general_joint_effects(const JointSpec& spec);

/// Same family, but throws BoundViolated (carrying the most negative
/// eigenvalue) for inadmissible specs.
Povm general_joint_povm(const JointSpec& spec, double tol = kAdmissibilityTol);

/// Two-outcome marginal for slot 0 (a) or slot 1 (a') of a joint POVM.
Povm marginal(const Povm& joint, std::size_t slot);

struct VarianceReport {
  double var_joint = 0.0;        ///< 1 - α²⟨A⟩²
  double var_joint_prime = 0.0;  ///< 1 - α'²⟨A'⟩²
  double var_bare = 0.0;         ///< 1 - ⟨A⟩²
  double var_bare_prime = 0.0;   ///< 1 - ⟨A'⟩²
};

VarianceReport joint_variances(const JointSpec& spec, const QubitState& state);

/// Measure c·σ with probability p, else c'·σ. Outcome C = ±1 maps to "++"/"--",
/// C' = ±1 maps to "+-"/"-+".
struct SwitchRealization {
  double p;
  UnitVector3 c;
  UnitVector3 c_prime;
};

/// Throws NotSaturating off the boundary and DegenerateDirection when
/// αa ± α'a' vanishes.
SwitchRealization switch_realization(const JointSpec& spec, double tol = kAdmissibilityTol);

/// Four-outcome POVM of the probabilistic switch, in kJointLabels order.
Povm switch_povm(const SwitchRealization& sw);

}  // namespace spinjoint
