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

#include "spinjoint/uncertainty.hpp"

#include <cmath>
#include <string>

namespace spinjoint {
namespace {

UncertaintyReport make_report(Relation r, double lhs, double rhs) {
  UncertaintyReport out;
  out.relation = r;
  out.lhs = lhs;
  out.rhs = rhs;
  out.slack = lhs - rhs;
  return out;
}

void require_nonzero_alphas(const JointSpec& spec) {
  if (spec.alpha() == 0.0 || spec.alpha_prime() == 0.0) {
    throw Error(Errc::ZeroAlpha, "product-form relations divide by alpha and alpha'");
  }
}

double sin2(const JointSpec& spec) {
  const double c = spec.cos_theta();
  return std::max(0.0, 1.0 - c * c);
}

double sin2(const UnitVector3& a, const UnitVector3& a_prime) {
  return a.vec().cross(a_prime.vec()).squaredNorm();
}

double mean_of(const UnitVector3& n, const QubitState& state) {
  return expectation(pauli_dot(n.vec()), state);
}

double joint_product_over_alphas(const JointSpec& spec, const QubitState& state) {
  if (!is_admissible(spec)) {
    (void)general_joint_povm(spec);  // throws BoundViolated with the eigenvalue
  }
  const VarianceReport v = joint_variances(spec, state);
  const double a2 = spec.alpha() * spec.alpha();
  const double ap2 = spec.alpha_prime() * spec.alpha_prime();
  return v.var_joint * v.var_joint_prime / (a2 * ap2);
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::ProductForm: return "product_form";
    case Relation::Robertson: return "robertson";
    case Relation::TotalJoint: return "total_joint";
    case Relation::ArthursGoodman: return "arthurs_goodman";
    case Relation::Schroedinger: return "schroedinger";
    case Relation::CirelsonProduct: return "cirelson_product";
  }
  return "unknown";
}

UnitVector3 perpendicular_direction(const UnitVector3& a, const UnitVector3& a_prime) {
  const Vector3 n = a.vec().cross(a_prime.vec());
  if (n.norm() <= kExactTol) {
    throw Error(Errc::CollinearDirections, "a and a' are collinear; a_perp is undefined");
  }
  return UnitVector3::normalized(n);
}

UncertaintyReport product_form(const JointSpec& spec) {
  require_nonzero_alphas(spec);
  const double a2 = spec.alpha() * spec.alpha();
  const double ap2 = spec.alpha_prime() * spec.alpha_prime();
  return make_report(Relation::ProductForm, (1.0 - a2) * (1.0 - ap2) / (a2 * ap2), sin2(spec));
}

UncertaintyReport robertson(const QubitState& state, const UnitVector3& a,
                            const UnitVector3& a_prime) {
  const UnitVector3 perp = perpendicular_direction(a, a_prime);
  const double ea = mean_of(a, state);
  const double eap = mean_of(a_prime, state);
  const double x = mean_of(perp, state);
  auto r = make_report(Relation::Robertson, (1.0 - ea * ea) * (1.0 - eap * eap),
                       sin2(a, a_prime) * x * x);
  r.a_perp = perp.vec();
  return r;
}

UncertaintyReport total_joint(const JointSpec& spec, const QubitState& state) {
  require_nonzero_alphas(spec);
  const UnitVector3 perp = perpendicular_direction(spec.a(), spec.a_prime());
  const double x = std::abs(mean_of(perp, state));
  auto r = make_report(Relation::TotalJoint, joint_product_over_alphas(spec, state),
                       sin2(spec.a(), spec.a_prime()) * (1.0 + x) * (1.0 + x));
  r.a_perp = perp.vec();
  return r;
}

UncertaintyReport arthurs_goodman(const JointSpec& spec, const QubitState& state) {
  require_nonzero_alphas(spec);
  const UnitVector3 perp = perpendicular_direction(spec.a(), spec.a_prime());
  const double x = mean_of(perp, state);
  const double s2 = sin2(spec.a(), spec.a_prime());
  auto r = make_report(Relation::ArthursGoodman, joint_product_over_alphas(spec, state),
                       4.0 * s2 * x * x);
  r.a_perp = perp.vec();
  r.reference_rhs = s2 * (1.0 + std::abs(x)) * (1.0 + std::abs(x));
  return r;
}

UncertaintyReport schroedinger(const QubitState& state, const UnitVector3& a,
                               const UnitVector3& a_prime) {
  const UnitVector3 perp = perpendicular_direction(a, a_prime);
  const ComplexMatrix2 A = pauli_dot(a.vec());
  const ComplexMatrix2 Ap = pauli_dot(a_prime.vec());
  const ComplexMatrix2& rho = state.rho();
  const double ea = (A * rho).trace().real();
  const double eap = (Ap * rho).trace().real();
  const double commutator = std::norm((ComplexMatrix2(A * Ap - Ap * A) * rho).trace());
  const double anticommutator = (ComplexMatrix2(A * Ap + Ap * A) * rho).trace().real();
  const double covariance = anticommutator - 2.0 * ea * eap;
  auto r = make_report(Relation::Schroedinger, (1.0 - ea * ea) * (1.0 - eap * eap),
                       0.25 * commutator + 0.25 * covariance * covariance);
  r.a_perp = perp.vec();
  r.reference_rhs = robertson(state, a, a_prime).rhs;
  return r;
}

UncertaintyReport cirelson_product(const JointSpec& spec) {
  require_nonzero_alphas(spec);
  const double a2 = spec.alpha() * spec.alpha();
  const double ap2 = spec.alpha_prime() * spec.alpha_prime();
  return make_report(Relation::CirelsonProduct, (2.0 - a2) * (2.0 - ap2) / (a2 * ap2), sin2(spec));
}

}  // namespace spinjoint
