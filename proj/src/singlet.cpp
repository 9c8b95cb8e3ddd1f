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

#include "spinjoint/singlet.hpp"

#include <cmath>

namespace spinjoint {
namespace {

Eigen::MatrixXd table_for(const Povm& povm1, const UnitVector3& direction) {
  return two_party_probabilities(povm1, projective_povm(direction), singlet());
}

std::size_t row_of(const Povm& povm, std::string_view label) {
  for (std::size_t i = 0; i < povm.size(); ++i) {
    if (povm[i].label == label) return i;
  }
  throw Error(Errc::InvalidArgument, "missing outcome " + std::string(label));
}

}  // namespace

TwoQubitState singlet() {
  Eigen::Vector4cd psi(0.0, 1.0, -1.0, 0.0);
  psi /= std::sqrt(2.0);
  return TwoQubitState::from_density(psi * psi.adjoint());
}

double sharp_correlation(const UnitVector3& a, const UnitVector3& b) { return -a.dot(b); }

CorrelationSet sharp_correlations(const UnitVector3& a, const UnitVector3& a_prime,
                                  const Settings& s) {
  return {sharp_correlation(a, s.b), sharp_correlation(a_prime, s.b),
          sharp_correlation(a, s.b_prime), sharp_correlation(a_prime, s.b_prime)};
}

CorrelationSet joint_correlations(const JointSpec& spec, const Settings& s) {
  if (!is_admissible(spec)) {
    // Route through the POVM builder so the error carries the eigenvalue.
    (void)general_joint_povm(spec);
  }
  return {spec.alpha() * sharp_correlation(spec.a(), s.b),
          spec.alpha_prime() * sharp_correlation(spec.a_prime(), s.b),
          spec.alpha() * sharp_correlation(spec.a(), s.b_prime),
          spec.alpha_prime() * sharp_correlation(spec.a_prime(), s.b_prime)};
}

double correlation_from_table(const Povm& povm1, const Eigen::MatrixXd& table, std::size_t slot) {
  double e = 0.0;
  for (std::size_t i = 0; i < povm1.size(); ++i) {
    const int v = outcome_value(povm1[i].label, slot);
    e += v * (table(i, 0) - table(i, 1));
  }
  return e;
}

CorrelationSet born_joint_correlations(const JointSpec& spec, const Settings& s) {
  const Povm povm = general_joint_povm(spec);
  const Eigen::MatrixXd tb = table_for(povm, s.b);
  const Eigen::MatrixXd tbp = table_for(povm, s.b_prime);
  return {correlation_from_table(povm, tb, 0), correlation_from_table(povm, tb, 1),
          correlation_from_table(povm, tbp, 0), correlation_from_table(povm, tbp, 1)};
}

double chsh_value(const CorrelationSet& c) {
  return std::abs(c.e_ab + c.e_apb) + std::abs(c.e_abp - c.e_apbp);
}

double cirelson_check(const CorrelationSet& corr) { return chsh_value(corr); }

Settings optimal_settings(const JointSpec& spec) {
  const Vector3 s = spec.sum();
  const Vector3 d = spec.difference();
  if (s.norm() <= 1e-12) {
    throw Error(Errc::DegenerateDirection, "αa + α'a' vanishes; b is undefined");
  }
  if (d.norm() <= 1e-12) {
    throw Error(Errc::DegenerateDirection, "αa - α'a' vanishes; b' is undefined");
  }
  return {UnitVector3::normalized(s), UnitVector3::normalized(d)};
}

NoSignallingProbe no_signalling_probe(const JointSpec& spec, const Settings& s) {
  const Povm povm = general_joint_povm(spec);
  auto p_equal = [&](const UnitVector3& direction) {
    const Eigen::MatrixXd t = table_for(povm, direction);
    return t.row(row_of(povm, "++")).sum() + t.row(row_of(povm, "--")).sum();
  };
  return {p_equal(s.b), p_equal(s.b_prime)};
}

SaturationDiagnostics saturation_diagnostics(const JointSpec& spec, const Settings& s) {
  const Povm povm = general_joint_povm(spec);
  const Eigen::MatrixXd tb = table_for(povm, s.b);
  const Eigen::MatrixXd tbp = table_for(povm, s.b_prime);
  const auto pp = row_of(povm, "++"), mm = row_of(povm, "--");
  const auto pm = row_of(povm, "+-"), mp = row_of(povm, "-+");
  // Column 0 is B = +1, column 1 is B = -1.
  return {tb(pp, 0) + tb(mm, 1), tb(pp, 1) + tb(mm, 0),
          tbp(pm, 0) + tbp(mp, 1), tbp(pm, 1) + tbp(mp, 0)};
}

}  // namespace spinjoint
