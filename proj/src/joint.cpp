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

#include "spinjoint/joint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace spinjoint {
namespace {

constexpr double kDegenerateNorm = 1e-12;

ComplexMatrix2 effect(double weight, const Vector3& v) {
  return weight * ComplexMatrix2::Identity() + pauli_dot(v) / 4.0;
}

Povm joint_povm(double w_sum, double w_diff, const Vector3& s, const Vector3& d) {
  return Povm({{"++", effect(w_sum, s)},
               {"--", effect(w_sum, -s)},
               {"+-", effect(w_diff, d)},
               {"-+", effect(w_diff, -d)}});
}

}  // namespace

int outcome_value(std::string_view label, std::size_t slot) {
  if (slot >= label.size() || (label[slot] != '+' && label[slot] != '-')) {
    throw Error(Errc::InvalidArgument, "label '" + std::string(label) + "' has no ±1 at slot " +
                                           std::to_string(slot));
  }
  return label[slot] == '+' ? 1 : -1;
}

JointSpec::JointSpec(const UnitVector3& a, const UnitVector3& a_prime, double alpha,
                     double alpha_prime, std::optional<double> theta)
    : a_(a), a_prime_(a_prime), alpha_(alpha), alpha_prime_(alpha_prime) {
  if (!std::isfinite(alpha) || !std::isfinite(alpha_prime) || std::abs(alpha) > 1.0 + kExactTol ||
      std::abs(alpha_prime) > 1.0 + kExactTol) {
    throw Error(Errc::InvalidSpec, "sharpness factors must satisfy |alpha| <= 1");
  }
  const double c = std::clamp(a_.dot(a_prime_), -1.0, 1.0);
  theta_ = std::acos(c);
  if (theta) {
    if (!(*theta >= 0.0 && *theta <= std::numbers::pi) || std::abs(std::cos(*theta) - c) > kExactTol) {
      throw Error(Errc::InvalidSpec, "supplied theta is inconsistent with a·a'", *theta);
    }
  }
}

JointSpec JointSpec::optimal_symmetric(const UnitVector3& a, const UnitVector3& a_prime) {
  const double theta = std::acos(std::clamp(a.dot(a_prime), -1.0, 1.0));
  const double alpha = max_symmetric_alpha(theta);
  return JointSpec(a, a_prime, alpha, alpha);
}

double bound_lhs(const JointSpec& spec) { return spec.sum().norm() + spec.difference().norm(); }

double product_form_check(const JointSpec& spec) {
  const double a2 = spec.alpha() * spec.alpha();
  const double ap2 = spec.alpha_prime() * spec.alpha_prime();
  const double c = spec.cos_theta();
  return a2 + ap2 - a2 * ap2 * c * c;
}

bool is_admissible(const JointSpec& spec, double tol) { return bound_lhs(spec) <= 2.0 + tol; }

bool saturates(const JointSpec& spec, double tol) { return std::abs(bound_lhs(spec) - 2.0) <= tol; }

double max_symmetric_alpha(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(Errc::InvalidArgument, "theta must lie in [0, pi]", theta);
  }
  return 1.0 / std::sqrt(1.0 + std::abs(std::sin(theta)));
}

Povm optimal_joint_povm(const JointSpec& spec, double tol) {
  const double lhs = bound_lhs(spec);
  if (std::abs(lhs - 2.0) > tol) {
    throw Error(Errc::NotSaturating, "optimal joint POVM requires |αa+α'a'| + |αa-α'a'| = 2", lhs);
  }
  const Vector3 s = spec.sum();
  const Vector3 d = spec.difference();
  return joint_povm(s.norm() / 4.0, d.norm() / 4.0, s, d);
}

Povm general_joint_effects(const JointSpec& spec) {
  const double k = spec.alpha() * spec.alpha_prime() * spec.cos_theta();
  return joint_povm((1.0 + k) / 4.0, (1.0 - k) / 4.0, spec.sum(), spec.difference());
}

Povm general_joint_povm(const JointSpec& spec, double tol) {
  Povm povm = general_joint_effects(spec);
  if (!is_admissible(spec, tol)) {
    const auto report = validate(povm, tol);
    throw Error(Errc::BoundViolated,
                "sharpness factors exceed the joint-measurement bound (bound_lhs = " +
                    std::to_string(bound_lhs(spec)) + ")",
                report.min_eigenvalue);
  }
  return povm;
}

Povm marginal(const Povm& joint, std::size_t slot) {
  return coarse_grain(joint, [slot](const std::string& label) {
    return std::string(1, outcome_value(label, slot) > 0 ? '+' : '-');
  });
}

VarianceReport joint_variances(const JointSpec& spec, const QubitState& state) {
  const double ea = expectation(pauli_dot(spec.a().vec()), state);
  const double eap = expectation(pauli_dot(spec.a_prime().vec()), state);
  VarianceReport r;
  r.var_joint = 1.0 - spec.alpha() * spec.alpha() * ea * ea;
  r.var_joint_prime = 1.0 - spec.alpha_prime() * spec.alpha_prime() * eap * eap;
  r.var_bare = 1.0 - ea * ea;
  r.var_bare_prime = 1.0 - eap * eap;
  return r;
}

SwitchRealization switch_realization(const JointSpec& spec, double tol) {
  const double lhs = bound_lhs(spec);
  if (std::abs(lhs - 2.0) > tol) {
    throw Error(Errc::NotSaturating, "the switch realization exists only on the bound", lhs);
  }
  const Vector3 s = spec.sum();
  const Vector3 d = spec.difference();
  if (s.norm() <= kDegenerateNorm) {
    throw Error(Errc::DegenerateDirection, "αa + α'a' vanishes; c is undefined");
  }
  if (d.norm() <= kDegenerateNorm) {
    throw Error(Errc::DegenerateDirection, "αa - α'a' vanishes; c' is undefined");
  }
  return {s.norm() / 2.0, UnitVector3::normalized(s), UnitVector3::normalized(d)};
}

Povm switch_povm(const SwitchRealization& sw) {
  const Povm along_c = projective_povm(sw.c);
  const Povm along_cp = projective_povm(sw.c_prime);
  const double q = 1.0 - sw.p;
  return Povm({{"++", sw.p * along_c.op("+")},
               {"--", sw.p * along_c.op("-")},
               {"+-", q * along_cp.op("+")},
               {"-+", q * along_cp.op("-")}});
}

}  // namespace spinjoint
