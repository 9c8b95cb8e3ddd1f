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
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace spinjoint;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

JointSpec orthogonal(double alpha, double alpha_prime) {
  return JointSpec(UnitVector3::z(), UnitVector3::x(), alpha, alpha_prime);
}

// a = z, a' = x, so a × a' = y.
const QubitState kUpPerp = QubitState::spin_up(UnitVector3::y());

/// Bloch-vector form of the covariance-strengthened bound.
double schroedinger_rhs_oracle(const Vector3& m, const Vector3& a, const Vector3& ap) {
  const double comm = a.cross(ap).dot(m);
  const double cov = a.dot(ap) - a.dot(m) * ap.dot(m);
  return comm * comm + cov * cov;
}

void expect_code(const std::function<void()>& f, Errc code) {
  try {
    f();
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Relation, Names) {
  EXPECT_EQ(to_string(Relation::ProductForm), "product_form");
  EXPECT_EQ(to_string(Relation::Robertson), "robertson");
  EXPECT_EQ(to_string(Relation::TotalJoint), "total_joint");
  EXPECT_EQ(to_string(Relation::ArthursGoodman), "arthurs_goodman");
  EXPECT_EQ(to_string(Relation::Schroedinger), "schroedinger");
  EXPECT_EQ(to_string(Relation::CirelsonProduct), "cirelson_product");
}

TEST(PerpendicularDirection, RightHanded) {
  EXPECT_LT((perpendicular_direction(UnitVector3::z(), UnitVector3::x()).vec() - Vector3::UnitY()).norm(),
            1e-15);
  expect_code([] { perpendicular_direction(UnitVector3::z(), -UnitVector3::z()); },
              Errc::CollinearDirections);
}

// ---------- product_form ----------
TEST(ProductForm, Examples) {
  const auto sat = product_form(orthogonal(1 / sqrt2, 1 / sqrt2));
  EXPECT_NEAR(sat.lhs, 1.0, 1e-15);
  EXPECT_NEAR(sat.rhs, 1.0, 1e-15);
  EXPECT_NEAR(sat.slack, 0.0, 1e-15);

  const auto par = product_form(JointSpec(UnitVector3::z(), UnitVector3::z(), 1.0, 1.0));
  EXPECT_EQ(par.lhs, 0.0);
  EXPECT_NEAR(par.rhs, 0.0, 1e-15);

  EXPECT_NEAR(product_form(orthogonal(0.5, 0.5)).lhs, 9.0, 1e-14);
  expect_code([] { product_form(orthogonal(0.0, 0.5)); }, Errc::ZeroAlpha);
}

TEST(ProductForm, SlackSignMatchesAdmissibility) {
  tsupport::Rng rng(61);
  for (int i = 0; i < 20000; ++i) {
    const JointSpec s(rng.direction(), rng.direction(), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double margin = product_form_check(s) - 1.0;
    if (std::abs(margin) < 1e-9) continue;
    EXPECT_EQ(product_form(s).slack >= 0.0, margin <= 0.0);
  }
}

TEST(ProductForm, ZeroSlackExactlyOnBoundary) {
  tsupport::Rng rng(62);
  for (int i = 0; i < 1000; ++i) {
    const JointSpec s = rng.saturating_spec();
    if (std::abs(s.alpha()) < 1e-3 || std::abs(s.alpha_prime()) < 1e-3) continue;
    // Relative: the product-form lhs blows up as α → 0.
    const auto r = product_form(s);
    EXPECT_NEAR(r.slack / std::max(1.0, r.lhs), 0.0, 1e-10);
  }
  for (int i = 1; i < 180; ++i) {
    const double t = pi * i / 180.0;
    const auto a2 = UnitVector3::normalized(Vector3(std::sin(t), 0, std::cos(t)));
    EXPECT_NEAR(product_form(JointSpec::optimal_symmetric(UnitVector3::z(), a2)).slack, 0.0, 1e-10);
  }
}

// ---------- robertson ----------
TEST(Robertson, Examples) {
  const auto mixed = robertson(QubitState::maximally_mixed(), UnitVector3::z(), UnitVector3::x());
  EXPECT_EQ(mixed.lhs, 1.0);
  EXPECT_EQ(mixed.rhs, 0.0);

  const auto perp = robertson(kUpPerp, UnitVector3::z(), UnitVector3::x());
  EXPECT_NEAR(perp.lhs, 1.0, 1e-15);
  EXPECT_NEAR(perp.rhs, 1.0, 1e-15);
  ASSERT_TRUE(perp.a_perp.has_value());
  EXPECT_LT((*perp.a_perp - Vector3::UnitY()).norm(), 1e-15);

  const auto along = robertson(QubitState::spin_up(UnitVector3::z()), UnitVector3::z(), UnitVector3::x());
  EXPECT_NEAR(along.lhs, 0.0, 1e-15);
  EXPECT_NEAR(along.rhs, 0.0, 1e-15);
}

// ---------- total_joint ----------
TEST(TotalJoint, Examples) {
  const JointSpec s = orthogonal(1 / sqrt2, 1 / sqrt2);
  const auto mixed = total_joint(s, QubitState::maximally_mixed());
  EXPECT_NEAR(mixed.lhs, 4.0, 1e-14);
  EXPECT_NEAR(mixed.rhs, 1.0, 1e-15);
  EXPECT_NEAR(mixed.slack, 3.0, 1e-14);

  const auto perp = total_joint(s, kUpPerp);
  EXPECT_NEAR(perp.lhs, 4.0, 1e-14);
  EXPECT_NEAR(perp.rhs, 4.0, 1e-14);
}

TEST(TotalJoint, SmallAngleLimit) {
  const double t = 1e-4;
  const JointSpec s = JointSpec::optimal_symmetric(
      UnitVector3::z(), UnitVector3::normalized(Vector3(std::sin(t), 0, std::cos(t))));
  const auto r = total_joint(s, state_from_bloch(Vector3(0.1, 0.9, 0.2)));
  EXPECT_LT(r.rhs, 1e-7);
  EXPECT_GE(r.slack, 0.0);
}

TEST(TotalJoint, RejectsInadmissible) {
  expect_code([] { total_joint(orthogonal(0.8, 0.8), kUpPerp); }, Errc::BoundViolated);
  expect_code([] { arthurs_goodman(orthogonal(0.8, 0.8), kUpPerp); }, Errc::BoundViolated);
}

// ---------- arthurs_goodman ----------
TEST(ArthursGoodman, Examples) {
  const JointSpec s = orthogonal(1 / sqrt2, 1 / sqrt2);
  EXPECT_EQ(arthurs_goodman(s, QubitState::maximally_mixed()).rhs, 0.0);

  const auto perp = arthurs_goodman(s, kUpPerp);
  EXPECT_NEAR(perp.rhs, 4.0, 1e-14);
  EXPECT_NEAR(*perp.reference_rhs, total_joint(s, kUpPerp).rhs, 1e-14);

  const auto half = arthurs_goodman(s, state_from_bloch(Vector3(0, 0.5, 0)));
  EXPECT_NEAR(half.rhs, 1.0, 1e-14);
  EXPECT_NEAR(*half.reference_rhs, 2.25, 1e-14);
}

TEST(ArthursGoodman, SpinBoundIsNeverWeaker) {
  tsupport::Rng rng(63);
  for (int i = 0; i < 5000; ++i) {
    const JointSpec s = rng.admissible_spec();
    if (s.alpha() == 0.0 || s.alpha_prime() == 0.0) continue;
    const auto r = arthurs_goodman(s, state_from_bloch(rng.ball()));
    // 4x² ≤ (1 + |x|)² for |x| ≤ 1.
    EXPECT_LE(r.rhs, *r.reference_rhs + 1e-12);
  }
}

// ---------- schroedinger ----------
TEST(Schroedinger, Examples) {
  const double t = 1.1;
  const auto ap = UnitVector3::normalized(Vector3(std::sin(t), 0, std::cos(t)));
  const auto mixed = schroedinger(QubitState::maximally_mixed(), UnitVector3::z(), ap);
  EXPECT_NEAR(mixed.lhs, 1.0, 1e-15);
  EXPECT_NEAR(mixed.rhs, std::cos(t) * std::cos(t), 1e-15);

  const auto perp = schroedinger(kUpPerp, UnitVector3::z(), UnitVector3::x());
  EXPECT_NEAR(perp.lhs, 1.0, 1e-15);
  EXPECT_NEAR(perp.rhs, 1.0, 1e-15);
}

TEST(Schroedinger, MatchesBlochOracle) {
  tsupport::Rng rng(64);
  for (int i = 0; i < 5000; ++i) {
    const Vector3 m = rng.ball();
    const auto a = rng.direction();
    const auto ap = rng.direction();
    const auto r = schroedinger(state_from_bloch(m), a, ap);
    EXPECT_NEAR(r.rhs, schroedinger_rhs_oracle(m, a.vec(), ap.vec()), 1e-12);
    EXPECT_GE(r.rhs, *r.reference_rhs - 1e-12);
    EXPECT_GE(r.slack, -1e-10);
  }
}

TEST(Schroedinger, TightOnPureStates) {
  tsupport::Rng rng(65);
  for (int i = 0; i < 10000; ++i) {
    const auto r = schroedinger(QubitState::spin_up(rng.direction()), rng.direction(), rng.direction());
    EXPECT_NEAR(r.slack, 0.0, 1e-10);
  }
}

TEST(Schroedinger, MixedSlackFormula) {
  // For Bloch radius r the slack is (1 - r²)(1 - c²) with c = a·a'.
  tsupport::Rng rng(66);
  for (int i = 0; i < 2000; ++i) {
    const Vector3 m = rng.ball();
    const auto a = rng.direction();
    const auto ap = rng.direction();
    const double c = a.dot(ap);
    const auto r = schroedinger(state_from_bloch(m), a, ap);
    EXPECT_NEAR(r.slack, (1 - m.squaredNorm()) * (1 - c * c), 1e-12);
  }
}

// ---------- cirelson_product ----------
TEST(CirelsonProduct, Examples) {
  const auto edge = cirelson_product(orthogonal(1.0, 1.0));
  EXPECT_NEAR(edge.lhs, 1.0, 1e-15);
  EXPECT_NEAR(edge.rhs, 1.0, 1e-15);
  EXPECT_NEAR(cirelson_product(JointSpec(UnitVector3::z(), UnitVector3::z(), 0.3, 0.9)).rhs, 0.0, 1e-15);
  EXPECT_NEAR(cirelson_product(orthogonal(1 / sqrt2, 1 / sqrt2)).lhs, 9.0, 1e-13);
  expect_code([] { cirelson_product(orthogonal(0.5, 0.0)); }, Errc::ZeroAlpha);
}

// ---------- all relations ----------
TEST(AllRelations, SlackNonnegativeOnRandomInputs) {
  tsupport::Rng rng(67);
  for (int i = 0; i < 10000; ++i) {
    const JointSpec s = rng.admissible_spec();
    const QubitState st = state_from_bloch(rng.ball());
    const std::vector<UncertaintyReport> reports = {
        product_form(s),         robertson(st, s.a(), s.a_prime()), total_joint(s, st),
        arthurs_goodman(s, st),  schroedinger(st, s.a(), s.a_prime()), cirelson_product(s)};
    for (const auto& r : reports) {
      EXPECT_GE(r.slack, -1e-10) << to_string(r.relation);
      EXPECT_EQ(r.slack, r.lhs - r.rhs);
    }
  }
}

TEST(AllRelations, TotalJointDominatesRobertsonAtTheBound) {
  // Δ²A_J/α² = (1-α²)/α² + Δ²A, so the lhs of total_joint exceeds robertson's lhs.
  tsupport::Rng rng(68);
  for (int i = 0; i < 2000; ++i) {
    const JointSpec s = rng.saturating_spec();
    if (std::abs(s.alpha()) < 1e-3 || std::abs(s.alpha_prime()) < 1e-3) continue;
    const QubitState st = state_from_bloch(rng.ball());
    EXPECT_GE(total_joint(s, st).lhs, robertson(st, s.a(), s.a_prime()).lhs - 1e-12);
  }
}
