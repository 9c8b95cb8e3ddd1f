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

#include "spinjoint/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace spinjoint {

const ComplexMatrix2& Povm::op(std::string_view label) const {
  for (const auto& e : effects_) {
    if (e.label == label) return e.op;
  }
  throw Error(Errc::InvalidArgument, "no effect labeled '" + std::string(label) + "'");
}

ComplexMatrix2 Povm::sum() const {
  ComplexMatrix2 total = ComplexMatrix2::Zero();
  for (const auto& e : effects_) total += e.op;
  return total;
}

ValidationReport validate(const Povm& povm, double tol) {
  ValidationReport report;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();

  if (povm.size() == 0) {
    report.failures.push_back("POVM has no effects");
  }
  for (const auto& e : povm) {
    EffectCheck check{e.label, hermiticity_defect(e.op), 0.0, 0.0};
    if (!e.op.allFinite()) {
      report.failures.push_back("effect '" + e.label + "' has non-finite entries");
      check.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
      report.effects.push_back(check);
      continue;
    }
    // Eigenvalues of the Hermitian part; a non-Hermitian effect fails separately.
    const ComplexMatrix2 herm = (e.op + e.op.adjoint()) / 2.0;
    std::tie(check.min_eigenvalue, check.max_eigenvalue) = hermitian_eigenvalues<double>(herm);
    if (check.hermiticity_defect > tol) {
      report.failures.push_back("effect '" + e.label + "' is not Hermitian");
    }
    if (check.min_eigenvalue < -tol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "effect '" << e.label << "' has negative eigenvalue " << check.min_eigenvalue;
      report.failures.push_back(msg.str());
    }
    report.min_eigenvalue = std::min(report.min_eigenvalue, check.min_eigenvalue);
    report.effects.push_back(check);
  }

  report.completeness_defect = (povm.sum() - ComplexMatrix2::Identity()).cwiseAbs().maxCoeff();
  if (!(report.completeness_defect <= tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "effects do not sum to identity (defect " << report.completeness_defect << ")";
    report.failures.push_back(msg.str());
  }
  report.passed = report.failures.empty();
  return report;
}

void require_valid(const Povm& povm, double tol) {
  const auto report = validate(povm, tol);
  if (!report.passed) {
    std::string detail;
    for (const auto& f : report.failures) {
      if (!detail.empty()) detail += "; ";
      detail += f;
    }
    throw Error(Errc::InvalidPovm, detail, report.min_eigenvalue);
  }
}

Povm projective_povm(const UnitVector3& a) {
  const ComplexMatrix2 id = ComplexMatrix2::Identity();
  const ComplexMatrix2 s = pauli_dot(a.vec());
  return Povm({{"+", (id + s) / 2.0}, {"-", (id - s) / 2.0}});
}

std::vector<OutcomeProbability> outcome_probabilities(const Povm& povm, const QubitState& state,
                                                      double tol) {
  require_valid(povm, tol);
  std::vector<OutcomeProbability> out;
  out.reserve(povm.size());
  for (const auto& e : povm) {
    double p = (e.op * state.rho()).trace().real();
    bool clamped = false;
    if (p < 0.0) {
      p = 0.0;
      clamped = true;
    }
    out.push_back({e.label, p, clamped});
  }
  return out;
}

Eigen::MatrixXd two_party_probabilities(const Povm& first, const Povm& second,
                                        const TwoQubitState& state, double tol) {
  require_valid(first, tol);
  require_valid(second, tol);
  Eigen::MatrixXd probs(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      probs(i, j) = (tensor2(first[i].op, second[j].op) * state.rho()).trace().real();
    }
  }
  return probs;
}

Povm coarse_grain(const Povm& povm, const std::function<std::string(const std::string&)>& relabel) {
  std::vector<Effect> merged;
  for (const auto& e : povm) {
    const std::string label = relabel(e.label);
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Effect& m) { return m.label == label; });
    if (it == merged.end()) {
      merged.push_back({label, e.op});
    } else {
      it->op += e.op;
    }
  }
  return Povm(std::move(merged));
}

}  // namespace spinjoint
