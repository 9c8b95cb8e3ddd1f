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
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace spinjoint;
using std::numbers::pi;
using std::numbers::sqrt2;

// ---------- cloning ----------
TEST(Cloning, OrthogonalGap) {
  const auto s = cloning_joint(pi / 2);
  EXPECT_NEAR(s.alpha_optimal, 1 / sqrt2, 1e-15);
  EXPECT_EQ(s.alpha_clone, 2.0 / 3.0);
  EXPECT_NEAR(s.gap, 1 / sqrt2 - 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(s.gap, 0.0404401145, 1e-10);
}

TEST(Cloning, ParallelGap) {
  const auto s = cloning_joint(0.0);
  EXPECT_EQ(s.alpha_optimal, 1.0);
  EXPECT_NEAR(s.gap, 1.0 / 3.0, 1e-15);
}

TEST(Cloning, EtaRange) {
  for (double eta : {0.0, -0.1, 0.7, 1.0}) {
    try {
      cloning_joint(1.0, eta);
      ADD_FAILURE() << eta;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::EtaOutOfRange);
    }
  }
  EXPECT_NO_THROW(cloning_joint(1.0, 0.3));
  EXPECT_THROW(cloning_joint(-1.0), Error);
}

TEST(Cloning, NeverOptimalOnGrid) {
  const auto scan = cloning_min_gap(kOptimalClonerEta, 181);
  EXPECT_EQ(scan.points, 181u);
  EXPECT_GT(scan.min_gap, 0.0);
  EXPECT_NEAR(scan.min_gap, 1 / sqrt2 - 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(scan.theta_at_min, pi / 2, 1e-15);
  for (int i = 0; i <= 180; ++i) {
    EXPECT_GT(max_symmetric_alpha(pi * i / 180.0), 2.0 / 3.0);
  }
  EXPECT_THROW(cloning_min_gap(kOptimalClonerEta, 1), Error);
}

TEST(Cloning, SymmetricCloneIsAdmissibleButInterior) {
  // α = α' = η sits strictly inside the admissible region for every θ.
  for (int i = 0; i <= 180; ++i) {
    const double t = pi * i / 180.0;
    const JointSpec s(UnitVector3::z(), UnitVector3::normalized(Vector3(std::sin(t), 0, std::cos(t))),
                      kOptimalClonerEta, kOptimalClonerEta);
    EXPECT_LT(bound_lhs(s), 2.0);
  }
}

// ---------- BB84 ----------
TEST(Bb84, OrthogonalBases) {
  const auto r = bb84_eve(100000, {2024, 0});
  EXPECT_NEAR(r.alpha, 1 / sqrt2, 1e-15);
  EXPECT_NEAR(r.guess_success_prob_after_announcement, (1 + 1 / sqrt2) / 2, 1e-15);
  EXPECT_NEAR(r.guess_success_prob_after_announcement, 0.8536, 1e-4);
  EXPECT_EQ(r.trials, 400000u);
  EXPECT_NEAR(r.empirical_success, r.guess_success_prob_after_announcement, 5 * r.std_error);
  EXPECT_LT(r.empirical_success, 1.0);
}

TEST(Bb84, QuarterTurnSensitivity) {
  const auto r = bb84_eve(100000, {2025, 0}, pi / 4, 3);
  EXPECT_NEAR(r.alpha, std::sqrt(2 - sqrt2), 1e-15);
  EXPECT_NEAR(r.guess_success_prob_after_announcement, 0.8827, 1e-4);
  EXPECT_NEAR(r.empirical_success, r.guess_success_prob_after_announcement, 5 * r.std_error);
}

TEST(Bb84, SingleBasisIsPerfect) {
  const auto r = bb84_eve(1000, {1, 0}, 0.0);
  EXPECT_EQ(r.alpha, 1.0);
  EXPECT_EQ(r.guess_success_prob_after_announcement, 1.0);
  EXPECT_EQ(r.empirical_success, 1.0);
}

TEST(Bb84, ImperfectForNonCollinearBases) {
  // Antiparallel bases commute again, so θ = π is as easy as θ = 0.
  EXPECT_EQ((1 + max_symmetric_alpha(pi)) / 2, 1.0);
  for (int i = 1; i < 180; ++i) {
    const double t = pi * i / 180.0;
    const double success = (1 + max_symmetric_alpha(t)) / 2;
    EXPECT_LT(success, 1.0);
    EXPECT_GE(success, 0.5);
  }
}

TEST(Bb84, DeterministicAndWorkerIndependent) {
  const auto a = bb84_eve(70000, {77, 3}, pi / 2, 1);
  const auto b = bb84_eve(70000, {77, 3}, pi / 2, 4);
  EXPECT_EQ(a.empirical_success, b.empirical_success);
  EXPECT_THROW(bb84_eve(0, {1, 0}), Error);
}
