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
#include <numbers>
#include <vector>

#include "reason_eval/core_model.hpp"
#include "reason_eval/errors.hpp"

namespace re = reason_eval;

namespace
{

std::vector<re::EgoState> straight_states(std::size_t n, double dt)
{
  std::vector<re::EgoState> states;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    states.push_back({t, 8.0 * t, -1.75, 0.0, 8.0});
  }
  return states;
}

re::AgentTrack cyclist_track(std::size_t n, double dt)
{
  std::vector<re::EnvAgentState> states;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    states.push_back({t, 30.0 + 1.4 * t, -2.0, 1.4, re::AgentKind::cyclist});
  }
  return re::AgentTrack("c0", states);
}

}  // namespace

TEST(Trajectory, AcceptsWellFormedStates)
{
  re::Trajectory traj("T1", 0.1, straight_states(201, 0.1));
  EXPECT_EQ(traj.size(), 201u);
  EXPECT_EQ(traj.id(), "T1");
  EXPECT_DOUBLE_EQ(traj[200].t, 20.0);
}

TEST(Trajectory, RejectsTooFewStates)
{
  EXPECT_THROW(re::Trajectory("x", 0.1, straight_states(1, 0.1)), re::InvalidArgument);
}

TEST(Trajectory, RejectsBadDt)
{
  EXPECT_THROW(re::Trajectory("x", 0.0, straight_states(3, 0.1)), re::InvalidArgument);
  EXPECT_THROW(re::Trajectory("x", -0.1, straight_states(3, 0.1)), re::InvalidArgument);
}

TEST(Trajectory, RejectsNonUniformTimestamps)
{
  auto states = straight_states(5, 0.1);
  states[3].t += 1e-6;
  EXPECT_THROW(re::Trajectory("x", 0.1, states), re::InvalidArgument);
}

TEST(Trajectory, RejectsNegativeSpeedAndNan)
{
  auto states = straight_states(5, 0.1);
  states[2].speed = -0.1;
  EXPECT_THROW(re::Trajectory("x", 0.1, states), re::InvalidArgument);
  states = straight_states(5, 0.1);
  states[1].y = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(re::Trajectory("x", 0.1, states), re::InvalidArgument);
}

TEST(Trajectory, HeadingRangeIsHalfOpen)
{
  auto states = straight_states(3, 0.1);
  states[0].heading = -std::numbers::pi;
  EXPECT_NO_THROW(re::Trajectory("x", 0.1, states));
  states[0].heading = std::numbers::pi;
  EXPECT_THROW(re::Trajectory("x", 0.1, states), re::InvalidArgument);
}

TEST(AgentTrack, RejectsEmptyAndMixedKind)
{
  EXPECT_THROW(re::AgentTrack("a", {}), re::InvalidArgument);
  std::vector<re::EnvAgentState> states{
    {0.0, 0.0, 0.0, 1.0, re::AgentKind::cyclist},
    {0.1, 0.1, 0.0, 1.0, re::AgentKind::vehicle}};
  EXPECT_THROW(re::AgentTrack("a", states), re::InvalidArgument);
}

TEST(Alignment, MatchingTimestampsPass)
{
  re::Trajectory traj("T1", 0.1, straight_states(11, 0.1));
  re::Environment env({cyclist_track(11, 0.1)});
  EXPECT_NO_THROW(re::validate_alignment(traj, env));
  EXPECT_TRUE(env.has_kind(re::AgentKind::cyclist));
  EXPECT_FALSE(env.has_kind(re::AgentKind::pedestrian));
}

TEST(Alignment, LengthMismatchNamesAgent)
{
  re::Trajectory traj("T1", 0.1, straight_states(11, 0.1));
  re::Environment env({cyclist_track(10, 0.1)});
  try {
    re::validate_alignment(traj, env);
    FAIL() << "expected AlignmentError";
  } catch (const re::AlignmentError & e) {
    EXPECT_EQ(e.agent_index(), 0u);
  }
}

TEST(Alignment, TimestampMismatchNamesStep)
{
  re::Trajectory traj("T1", 0.1, straight_states(11, 0.1));
  auto track = cyclist_track(11, 0.1);
  auto states = track.states();
  states[4].t += 0.01;
  re::Environment env({re::AgentTrack("c0", states)});
  try {
    re::validate_alignment(traj, env);
    FAIL() << "expected AlignmentError";
  } catch (const re::AlignmentError & e) {
    EXPECT_EQ(e.agent_index(), 0u);
    EXPECT_EQ(e.step_index(), 4u);
  }
}

TEST(AgentSpec, AlphasMustSumToOne)
{
  EXPECT_NO_THROW(re::AgentSpec(
    "a", {{"r1", re::ReasonKind::policymaker_lane, 0.4},
          {"r2", re::ReasonKind::driver_efficiency, 0.6}}));
  EXPECT_THROW(
    re::AgentSpec("a", {{"r1", re::ReasonKind::policymaker_lane, 0.5}}), re::InvalidArgument);
  EXPECT_THROW(re::AgentSpec("a", {}), re::InvalidArgument);
  EXPECT_THROW(re::ReasonSpec("r", re::ReasonKind::policymaker_lane, 1.5), re::InvalidArgument);
}

TEST(WeightVector, ValidatesSumAndRange)
{
  EXPECT_NO_THROW(re::WeightVector({0.2, 0.6, 0.2}));
  EXPECT_THROW(re::WeightVector({0.5, 0.6, 0.2}), re::InvalidArgument);
  EXPECT_THROW(re::WeightVector({-0.1, 0.6, 0.5}), re::InvalidArgument);
  EXPECT_THROW(re::WeightVector({0.5, 0.5}, {0.5, 0.3, 0.2}), re::InvalidArgument);
  EXPECT_THROW(re::WeightVector({0.5, 0.5}, {1.0, 0.0}), re::InvalidArgument);
  // Within 1e-9 is accepted.
  EXPECT_NO_THROW(re::WeightVector({0.2, 0.6, 0.2 + 5e-10}));
}

TEST(WeightVector, SumMessage)
{
  try {
    re::WeightVector w({0.5, 0.6, 0.2});
    FAIL();
  } catch (const re::InvalidArgument & e) {
    EXPECT_NE(std::string(e.what()).find("weights must sum to 1"), std::string::npos);
  }
}

TEST(WeightVector, UniformDefaults)
{
  const auto w = re::make_uniform_weights(4);
  ASSERT_EQ(w.size(), 4u);
  for (double v : w.w_star()) EXPECT_DOUBLE_EQ(v, 0.25);
  EXPECT_THROW(re::make_uniform_weights(0), re::InvalidArgument);
}

TEST(Enums, StringRoundTrip)
{
  for (auto k : {re::AgentKind::cyclist, re::AgentKind::vehicle, re::AgentKind::pedestrian}) {
    EXPECT_EQ(re::agent_kind_from_string(re::to_string(k)), k);
  }
  for (auto k : {re::ReasonKind::policymaker_lane, re::ReasonKind::driver_efficiency,
      re::ReasonKind::cyclist_safety_comfort})
  {
    EXPECT_EQ(re::reason_kind_from_string(re::to_string(k)), k);
  }
  for (auto m : {re::DistanceMetric::footprint, re::DistanceMetric::reference_point,
      re::DistanceMetric::lateral})
  {
    EXPECT_EQ(re::distance_metric_from_string(re::to_string(m)), m);
  }
  EXPECT_THROW(re::agent_kind_from_string("truck"), re::InvalidArgument);
}

TEST(ReasonParams, RejectsNonPositiveConstants)
{
  re::ReasonParams p;
  EXPECT_NO_THROW(p.validate());
  p.k2 = 0.0;
  EXPECT_THROW(p.validate(), re::InvalidArgument);
  p = re::ReasonParams{};
  p.d_th = -1.0;
  EXPECT_THROW(p.validate(), re::InvalidArgument);
}
