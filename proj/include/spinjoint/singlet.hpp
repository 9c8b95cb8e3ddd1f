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

// Two observers sharing a singlet: observer 1 runs a joint measurement along
// (a, a'), observer 2 a sharp measurement along b or b'.

#include <numbers>

#include <Eigen/Dense>

#include "spinjoint/joint.hpp"

namespace spinjoint {

inline constexpr double kCirelsonBound = 2.0 * std::numbers::sqrt2;

struct Settings {
  UnitVector3 b;
  UnitVector3 b_prime;
};

/// E(A_J,B), E(A'_J,B), E(A_J,B'), E(A'_J,B').
struct CorrelationSet {
  double e_ab = 0.0;
  double e_apb = 0.0;
  double e_abp = 0.0;
  double e_apbp = 0.0;
};

/// |ψ⁻⟩⟨ψ⁻| with |ψ⁻⟩ = (|+-⟩ - |-+⟩)/√2.
TwoQubitState singlet();

/// ⟨ψ⁻| a·σ₁ b·σ₂ |ψ⁻⟩ = -a·b.
double sharp_correlation(const UnitVector3& a, const UnitVector3& b);

/// Correlations of sharp measurements a, a' against b, b' (closed form).
CorrelationSet sharp_correlations(const UnitVector3& a, const UnitVector3& a_prime,
                                  const Settings& settings);

/// Closed form: E(A_J,B) = -α a·b, E(A'_J,B) = -α' a'·b, and likewise for b'.
/// Throws BoundViolated for inadmissible specs.
CorrelationSet joint_correlations(const JointSpec& spec, const Settings& settings);

/// Same quantities from the Born rule on the singlet with general_joint_povm
/// on qubit 1 and projective b / b' on qubit 2.
CorrelationSet born_joint_correlations(const JointSpec& spec, const Settings& settings);

/// E over `slot` of the observer-1 labels against observer 2's ±1 from a
/// (|povm1| x 2) Born table whose columns are "+", "-".
double correlation_from_table(const Povm& povm1, const Eigen::MatrixXd& table, std::size_t slot);

/// |E(A_J,B) + E(A'_J,B)| + |E(A_J,B') - E(A'_J,B')|.
double chsh_value(const CorrelationSet& corr);

/// The CHSH value, to be compared with kCirelsonBound.
double cirelson_check(const CorrelationSet& corr);

/// b ∥ αa + α'a', b' ∥ αa - α'a'. Throws DegenerateDirection if either vanishes.
Settings optimal_settings(const JointSpec& spec);

/// p(A_J = A'_J) computed from the two-party distribution with observer 2
/// measuring b, and again with b'.
struct NoSignallingProbe {
  double p_equal_b = 0.0;
  double p_equal_b_prime = 0.0;
  double difference() const { return p_equal_b - p_equal_b_prime; }
};

NoSignallingProbe no_signalling_probe(const JointSpec& spec, const Settings& settings);

/// Triple probabilities used in the locality argument. "same_*" are taken with
/// observer 2 along b, "diff_*" along b'.
struct SaturationDiagnostics {
  double same_eq_b = 0.0;         ///< p(A_J = A'_J = B)
  double same_eq_minus_b = 0.0;   ///< p(A_J = A'_J = -B)
  double diff_eq_bp = 0.0;        ///< p(A_J = -A'_J = B')
  double diff_eq_minus_bp = 0.0;  ///< p(A_J = -A'_J = -B')
};

SaturationDiagnostics saturation_diagnostics(const JointSpec& spec, const Settings& settings);

}  // namespace spinjoint
