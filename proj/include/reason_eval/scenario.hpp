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

#ifndef REASON_EVAL__SCENARIO_HPP_
#define REASON_EVAL__SCENARIO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "reason_eval/core_model.hpp"

namespace reason_eval
{

constexpr double kmh_to_mps(double kmh) { return kmh / 3.6; }

/// Two-lane road along +x. The right (legal) lane spans
/// [centerline_y - lane_width, centerline_y]; the oncoming lane lies above the divider.
struct RoadModel
{
  double total_width{7.0};
  double lane_width{3.5};
  double centerline_y{0.0};
  double speed_limit{kmh_to_mps(30.0)};
  double length{500.0};

  void validate() const;
  double right_lane_center() const noexcept { return centerline_y - 0.5 * lane_width; }
  double left_road_edge() const noexcept { return centerline_y + (total_width - lane_width); }
};

/// Ego rectangle centered on the state's (x, y).
struct VehicleFootprint
{
  double length{4.5};
  double width{1.8};

  void validate() const;
};

/// Static geometry the reason functions need besides the states themselves.
struct EvaluationGeometry
{
  RoadModel road;
  VehicleFootprint ego;
};

/// d_veh: divider minus the ego's left edge (y + width / 2). Positive on the legal
/// side, negative by the encroachment depth otherwise.
double signed_lane_distance(const EgoState & state, const RoadModel & road, double vehicle_width);

/// Euclidean distance between the ego and agent reference points.
/// Throws AlignmentError if the timestamps differ by more than 1e-9 s.
double agent_distance(const EgoState & state, const EnvAgentState & agent);

/// Distance from the agent point to the ego footprint rectangle (0 inside).
double footprint_distance(
  const EgoState & state, const VehicleFootprint & ego, const EnvAgentState & agent);

/// Lateral gap between the agent point and the ego's nearer side edge (0 if overlapping).
double lateral_distance(
  const EgoState & state, const VehicleFootprint & ego, const EnvAgentState & agent);

double ego_agent_distance(
  const EgoState & state, const VehicleFootprint & ego, const EnvAgentState & agent,
  DistanceMetric metric);

enum class CandidateStyle { small_gap, medium_gap, large_gap, follow };

std::string_view to_string(CandidateStyle style);
CandidateStyle candidate_style_from_string(std::string_view name);

struct CandidateParams
{
  std::string id;
  CandidateStyle style{CandidateStyle::small_gap};
  double lateral_clearance{0.0};      // m, cyclist to ego right edge while alongside
  double overtake_speed{0.0};         // m/s
  double encroachment_duration{0.0};  // s, between the lane-change midpoints
};

/// T1 small gap, T2 medium gap, T3 large gap, T4 conservative following.
std::vector<CandidateParams> default_candidates();

struct ScenarioConfig
{
  double horizon{20.0};
  double dt{kDefaultDt};
  RoadModel road{};
  VehicleFootprint ego{};
  double ego_initial_speed{kmh_to_mps(30.0)};
  double initial_gap{25.0};  // ego front bumper to cyclist, m
  double max_accel{2.5};
  double cyclist_speed{kmh_to_mps(5.0)};
  double cyclist_y{-2.0};
  double follow_gap{1.5};    // bumper to cyclist while following, m
  double follow_decel{2.0};
  double lateral_time_constant{0.35};  // logistic lane-change time scale, s
  std::vector<CandidateParams> candidates{default_candidates()};

  void validate() const;
  std::size_t step_count() const;  // p + 1
};

struct Scenario
{
  EvaluationGeometry geometry;
  Environment environment;
};

/// Road plus a single cyclist riding straight in the right lane at constant speed.
Scenario build_scenario(const ScenarioConfig & config);

/// Parametric candidates on the scenario's time grid. Overtaking styles follow a
/// logistic lateral bump centred on the passing instant; `follow` cruises, brakes,
/// and holds the cyclist's speed at follow_gap.
std::vector<Trajectory> generate_candidates(const Scenario & scenario, const ScenarioConfig & config);

}  // namespace reason_eval

#endif  // REASON_EVAL__SCENARIO_HPP_
