// Copyright 2026 The reason_eval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "reason_eval/errors.hpp"
#include "reason_eval/reasons.hpp"

namespace re = reason_eval;

namespace
{

// Frozen high-precision references.
constexpr double kExpMinus04 = 0.670320046035639301;
constexpr double kExpMinus1 = 0.367879441171442322;
constexpr double kExpMinus02 = 0.818730753077981859;
constexpr double kSafetyTimesComfort = 0.301194211912202097;

const re::ReasonParams kParams{};

}  // namespace

TEST(Policymaker, InsideLaneScoresOne)
{
  EXPECT_EQ(re::policymaker_step({0.5, 10.0}, kParams), 1.0);
}

TEST(Policymaker, BoundaryUsesExponentialBranch)
{
  // d_veh = 0 is not strictly inside, exp(0) = 1 anyway.
  EXPECT_EQ(re::policymaker_step({0.0, 10.0}, kParams), 1.0);
}

TEST(Policymaker, EncroachmentTwoMetres)
{
  EXPECT_NEAR(re::policymaker_step({-2.0, 10.0}, kParams), kExpMinus04, 1e-15);
}

TEST(Policymaker, RejectsNan)
{
  EXPECT_THROW(
    re::policymaker_step({std::numeric_limits<double>::quiet_NaN(), 1.0}, kParams),
    re::InvalidArgument);
}

TEST(Driver, FreeRoadScoresOneAndKeepsClock)
{
  const auto r = re::driver_step({1.0, 50.0}, {0.0, 0.0}, 0.1, kParams);
  EXPECT_EQ(r.score, 1.0);
  EXPECT_EQ(r.clocks.t_elapsed, 0.0);
}

TEST(Driver, UnderGraceTimeScoresOneButAdvancesClock)
{
  const auto r = re::driver_step({1.0, 5.0}, {4.0, 0.0}, 0.1, kParams);
  EXPECT_EQ(r.score, 1.0);
  EXPECT_NEAR(r.clocks.t_elapsed, 4.1, 1e-12);
}

TEST(Driver, StuckTenSeconds)
{
  const auto r = re::driver_step({1.0, 5.0}, {10.0, 0.0}, 0.1, kParams);
  EXPECT_NEAR(r.score, kExpMinus1, 1e-15);
}

TEST(Driver, DistanceExactlyAtThresholdCounts)
{
  const auto r = re::driver_step({1.0, 10.0}, {10.0, 0.0}, 0.1, kParams);
  EXPECT_NEAR(r.score, kExpMinus1, 1e-15);
  EXPECT_NEAR(r.clocks.t_elapsed, 10.1, 1e-12);
}

TEST(Driver, RejectsBadInputs)
{
  EXPECT_THROW(re::driver_step({1.0, -0.1}, {}, 0.1, kParams), re::InvalidArgument);
  EXPECT_THROW(re::driver_step({1.0, 1.0}, {}, 0.0, kParams), re::InvalidArgument);
  EXPECT_THROW(re::driver_step({1.0, 1.0}, {-1.0, 0.0}, 0.1, kParams), re::InvalidState);
}

TEST(Cyclist, SafetyAtOneMetre)
{
  EXPECT_NEAR(re::cyclist_safety({0.0, 1.0}, kParams), kExpMinus02, 1e-15);
  EXPECT_EQ(re::cyclist_safety({0.0, 2.5}, kParams), 1.0);
}

TEST(Cyclist, SafetyAtContact)
{
  EXPECT_NEAR(re::cyclist_safety({0.0, 0.0}, kParams), kExpMinus04, 1e-15);
}

TEST(Cyclist, ComfortAfterEightSeconds)
{
  const auto r = re::cyclist_comfort({0.0, 1.0}, {0.0, 8.0}, 0.1, kParams);
  EXPECT_NEAR(r.score, kExpMinus1, 1e-15);
}

TEST(Cyclist, StepIsProduct)
{
  const auto r = re::cyclist_step({0.0, 1.0}, {0.0, 8.0}, 0.1, kParams);
  EXPECT_NEAR(r.score, kSafetyTimesComfort, 1e-15);
  EXPECT_NEAR(r.clocks.t_follow, 8.1, 1e-12);
}

TEST(Cyclist, ClockDoesNotAdvanceWhenFar)
{
  const auto r = re::cyclist_step({0.0, 3.0}, {0.0, 2.0}, 0.1, kParams);
  EXPECT_EQ(r.clocks.t_follow, 2.0);
  EXPECT_EQ(r.score, 1.0);
}

// Property: every step score lies in (0, 1] and clocks never decrease.
TEST(ReasonProperties, RangeAndMonotoneClocks)
{
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> d_veh(-5.0, 5.0);
  std::uniform_real_distribution<double> d_vc(0.0, 30.0);
  std::uniform_real_distribution<double> clock(0.0, 40.0);
  for (int i = 0; i < 10000; ++i) {
    const re::GeometryInputs g{d_veh(rng), d_vc(rng)};
    const re::FollowClocks c{clock(rng), clock(rng)};
    const double p = re::policymaker_step(g, kParams);
    const auto d = re::driver_step(g, c, 0.1, kParams);
    const auto cy = re::cyclist_step(g, c, 0.1, kParams);
    for (double s : {p, d.score, cy.score}) {
      ASSERT_GT(s, 0.0);
      ASSERT_LE(s, 1.0);
    }
    ASSERT_GE(d.clocks.t_elapsed, c.t_elapsed);
    ASSERT_GE(cy.clocks.t_follow, c.t_follow);
  }
}

// Property: scores are continuous across each threshold.
TEST(ReasonProperties, ContinuityAtThresholds)
{
  constexpr double eps = 1e-9;
  constexpr double tol = 1e-6;
  EXPECT_NEAR(
    re::policymaker_step({-eps, 1.0}, kParams), re::policymaker_step({eps, 1.0}, kParams), tol);
  const double t = kParams.t_driver;
  EXPECT_NEAR(
    re::driver_step({1.0, 5.0}, {t - eps, 0.0}, 0.1, kParams).score,
    re::driver_step({1.0, 5.0}, {t + eps, 0.0}, 0.1, kParams).score, tol);
  EXPECT_NEAR(
    re::cyclist_safety({0.0, kParams.d_th - eps}, kParams),
    re::cyclist_safety({0.0, kParams.d_th + eps}, kParams), tol);
  const double tt = kParams.t_th;
  EXPECT_NEAR(
    re::cyclist_comfort({0.0, 1.0}, {0.0, tt - eps}, 0.1, kParams).score,
    re::cyclist_comfort({0.0, 1.0}, {0.0, tt + eps}, 0.1, kParams).score, tol);
}

// Property: more encroachment never scores higher, a closer cyclist never scores higher.
TEST(ReasonProperties, Monotonicity)
{
  double prev = 1.0;
  for (double dv = 1.0; dv >= -6.0; dv -= 0.01) {
    const double s = re::policymaker_step({dv, 1.0}, kParams);
    ASSERT_LE(s, prev + 1e-15);
    prev = s;
  }
  prev = 1.0;
  for (double dvc = 5.0; dvc >= 0.0; dvc -= 0.01) {
    const double s = re::cyclist_safety({0.0, dvc}, kParams);
    ASSERT_LE(s, prev + 1e-15);
    prev = s;
  }
}
