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

#include "reason_eval/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

#include "reason_eval/errors.hpp"

namespace reason_eval
{
namespace
{

constexpr double kSpeedTolerance = 1e-9;

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double logistic_slope(double z)
{
  const double s = logistic(z);
  return s * (1.0 - s);
}

/// Speed ramp from v0 to v1 at constant |accel|, then constant.
struct SpeedRamp
{
  double v0;
  double v1;
  double accel;

  double ramp_time() const { return std::abs(v1 - v0) / accel; }

  double speed(double t) const
  {
    const double tr = ramp_time();
    if (t >= tr) return v1;
    return v0 + (v1 > v0 ? accel : -accel) * t;
  }

  double distance(double t) const
  {
    const double tr = ramp_time();
    const double tc = std::min(t, tr);
    const double a = v1 > v0 ? accel : -accel;
    double s = v0 * tc + 0.5 * a * tc * tc;
    if (t > tr) s += v1 * (t - tr);
    return s;
  }
};

/// First root of a function that crosses zero from below, bracketed by a scan.
std::optional<double> first_crossing(const std::function<double(double)> & f, double t_max)
{
  constexpr double step = 1e-3;
  double lo = 0.0;
  if (f(lo) >= 0.0) return lo;
  for (double hi = step; hi <= t_max; hi += step) {
    if (f(hi) >= 0.0) {
      for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) >= 0.0 ? hi : lo) = mid;
      }
      return hi;
    }
    lo = hi;
  }
  return std::nullopt;
}

Trajectory generate_overtake(
  const Scenario & scenario, const ScenarioConfig & config, const CandidateParams & cand)
{
  const auto & road = scenario.geometry.road;
  const auto & ego = scenario.geometry.ego;
  const SpeedRamp ramp{config.ego_initial_speed, cand.overtake_speed, config.max_accel};

  const double y0 = road.right_lane_center();
  const double cyclist_x0 = 0.5 * ego.length + config.initial_gap;
  auto cyclist_x = [&](double t) { return cyclist_x0 + config.cyclist_speed * t; };

  const double t_search = 10.0 * config.horizon;
  const auto t_front = first_crossing(
    [&](double t) { return ramp.distance(t) + 0.5 * ego.length - cyclist_x(t); }, t_search);
  const auto t_rear = first_crossing(
    [&](double t) { return ramp.distance(t) - 0.5 * ego.length - cyclist_x(t); }, t_search);
  if (!t_front || !t_rear) {
    throw ConfigError("candidate '" + cand.id + "': ego never passes the cyclist");
  }

  const double amplitude = config.cyclist_y + cand.lateral_clearance + 0.5 * ego.width - y0;
  if (amplitude <= 0.0) {
    throw ConfigError(
      "candidate '" + cand.id + "': lateral clearance does not require leaving the lane centre");
  }
  if (y0 + amplitude + 0.5 * ego.width > road.left_road_edge() + 1e-12) {
    throw ConfigError("candidate '" + cand.id + "': lateral clearance exceeds the road width");
  }

  const double tau = config.lateral_time_constant;
  const double t_mid = 0.5 * (*t_front + *t_rear);
  const double t_out = t_mid - 0.5 * cand.encroachment_duration;
  const double t_back = t_mid + 0.5 * cand.encroachment_duration;

  auto lateral = [&](double t) {
    return y0 + amplitude * (logistic((t - t_out) / tau) - logistic((t - t_back) / tau));
  };
  auto lateral_rate = [&](double t) {
    return amplitude / tau * (logistic_slope((t - t_out) / tau) - logistic_slope((t - t_back) / tau));
  };
  auto forward_rate = [&](double t) {
    const double v = ramp.speed(t);
    const double vy = lateral_rate(t);
    const double rem = v * v - vy * vy;
    if (rem < 0.0) {
      throw ConfigError(
        "candidate '" + cand.id + "': lane change too abrupt for the overtaking speed");
    }
    return std::sqrt(rem);
  };

  const std::size_t n = config.step_count();
  constexpr int kSub = 16;  // Simpson sub-intervals per step, even
  std::vector<EgoState> states;
  states.reserve(n);
  double x = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double t = static_cast<double>(l) * config.dt;
    if (l > 0) {
      const double t_prev = static_cast<double>(l - 1) * config.dt;
      const double h = (t - t_prev) / kSub;
      double acc = forward_rate(t_prev) + forward_rate(t);
      for (int k = 1; k < kSub; ++k) {
        acc += (k % 2 == 1 ? 4.0 : 2.0) * forward_rate(t_prev + k * h);
      }
      x += acc * h / 3.0;
    }
    const double vx = forward_rate(t);
    const double vy = lateral_rate(t);
    states.push_back({t, x, lateral(t), std::atan2(vy, vx), ramp.speed(t)});
  }

  const double d_first = signed_lane_distance(states.front(), road, ego.width);
  const double d_last = signed_lane_distance(states.back(), road, ego.width);
  if (d_first < 0.0 || d_last < 0.0) {
    throw ConfigError(
      "candidate '" + cand.id + "': encroachment episode does not fit inside the horizon");
  }
  return Trajectory(cand.id, config.dt, std::move(states));
}

Trajectory generate_follow(
  const Scenario & scenario, const ScenarioConfig & config, const CandidateParams & cand)
{
  const auto & road = scenario.geometry.road;
  const double v0 = config.ego_initial_speed;
  const double vc = config.cyclist_speed;
  const double closing = v0 - vc;
  if (closing <= 0.0) {
    throw ConfigError("candidate '" + cand.id + "': ego must start faster than the cyclist");
  }
  const double room = config.initial_gap - config.follow_gap;
  if (room <= 0.0) {
    throw ConfigError("candidate '" + cand.id + "': initial gap is already below the follow gap");
  }

  // Cruise, then brake at follow_decel so the speeds match exactly at follow_gap.
  double decel = config.follow_decel;
  double braking_room = closing * closing / (2.0 * decel);
  if (braking_room > room) {
    decel = closing * closing / (2.0 * room);
    braking_room = room;
  }
  if (decel > config.max_accel + kSpeedTolerance) {
    throw ConfigError("candidate '" + cand.id + "': follow manoeuvre needs braking above max_accel");
  }
  const double t_brake = (room - braking_room) / closing;
  const double t_match = t_brake + closing / decel;

  auto position = [&](double t) {
    if (t <= t_brake) return v0 * t;
    const double x_brake = v0 * t_brake;
    if (t <= t_match) {
      const double tb = t - t_brake;
      return x_brake + v0 * tb - 0.5 * decel * tb * tb;
    }
    const double tb = t_match - t_brake;
    return x_brake + v0 * tb - 0.5 * decel * tb * tb + vc * (t - t_match);
  };
  auto speed = [&](double t) {
    if (t <= t_brake) return v0;
    if (t <= t_match) return v0 - decel * (t - t_brake);
    return vc;
  };

  const std::size_t n = config.step_count();
  std::vector<EgoState> states;
  states.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    const double t = static_cast<double>(l) * config.dt;
    states.push_back({t, position(t), road.right_lane_center(), 0.0, std::max(0.0, speed(t))});
  }
  return Trajectory(cand.id, config.dt, std::move(states));
}

}  // namespace

void RoadModel::validate() const
{
  if (!positive(total_width) || !positive(lane_width) || !positive(speed_limit) ||
    !positive(length) || !std::isfinite(centerline_y))
  {
    throw ConfigError("road: widths, speed limit and length must be positive");
  }
  if (std::abs(total_width - 2.0 * lane_width) > 1e-9) {
    throw ConfigError("road: total_width must equal 2 * lane_width");
  }
}

void VehicleFootprint::validate() const
{
  if (!positive(length) || !positive(width)) {
    throw ConfigError("ego: length and width must be positive");
  }
}

double signed_lane_distance(const EgoState & state, const RoadModel & road, double vehicle_width)
{
  if (!positive(vehicle_width)) {
    throw InvalidArgument("vehicle width must be positive");
  }
  if (!std::isfinite(state.y)) {
    throw InvalidArgument("ego lateral position must be finite");
  }
  return road.centerline_y - (state.y + 0.5 * vehicle_width);
}

double agent_distance(const EgoState & state, const EnvAgentState & agent)
{
  if (std::abs(state.t - agent.t) > kTimeTolerance) {
    throw AlignmentError("agent_distance: timestamps differ", 0, 0);
  }
  return std::hypot(agent.x - state.x, agent.y - state.y);
}

double footprint_distance(
  const EgoState & state, const VehicleFootprint & ego, const EnvAgentState & agent)
{
  if (std::abs(state.t - agent.t) > kTimeTolerance) {
    throw AlignmentError("footprint_distance: timestamps differ", 0, 0);
  }
  const double dx = agent.x - state.x;
  const double dy = agent.y - state.y;
  const double c = std::cos(state.heading);
  const double s = std::sin(state.heading);
  const double lon = c * dx + s * dy;
  const double lat = -s * dx + c * dy;
  const double ex = std::max(std::abs(lon) - 0.5 * ego.length, 0.0);
  const double ey = std::max(std::abs(lat) - 0.5 * ego.width, 0.0);
  return std::hypot(ex, ey);
}

double lateral_distance(
  const EgoState & state, const VehicleFootprint & ego, const EnvAgentState & agent)
{
  if (std::abs(state.t - agent.t) > kTimeTolerance) {
    throw AlignmentError("lateral_distance: timestamps differ", 0, 0);
  }
  return std::max(std::abs(agent.y - state.y) - 0.5 * ego.width, 0.0);
}

double ego_agent_distance(
  const EgoState & state, const VehicleFootprint & ego, const EnvAgentState & agent,
  DistanceMetric metric)
{
  switch (metric) {
    case DistanceMetric::footprint:
      return footprint_distance(state, ego, agent);
    case DistanceMetric::reference_point:
      return agent_distance(state, agent);
    case DistanceMetric::lateral:
      return lateral_distance(state, ego, agent);
  }
  throw InvalidArgument("unknown distance metric");
}

std::string_view to_string(CandidateStyle style)
{
  switch (style) {
    case CandidateStyle::small_gap:
      return "small_gap";
    case CandidateStyle::medium_gap:
      return "medium_gap";
    case CandidateStyle::large_gap:
      return "large_gap";
    case CandidateStyle::follow:
      return "follow";
  }
  return "unknown";
}

CandidateStyle candidate_style_from_string(std::string_view name)
{
  if (name == "small_gap") return CandidateStyle::small_gap;
  if (name == "medium_gap") return CandidateStyle::medium_gap;
  if (name == "large_gap") return CandidateStyle::large_gap;
  if (name == "follow") return CandidateStyle::follow;
  throw InvalidArgument("unknown candidate style '" + std::string(name) + "'");
}

std::vector<CandidateParams> default_candidates()
{
  // Wider passes are flown slower, so they spend longer near the cyclist.
  return {
    {"T1", CandidateStyle::small_gap, 0.8, kmh_to_mps(30.0), 3.0},
    {"T2", CandidateStyle::medium_gap, 1.5, kmh_to_mps(20.0), 4.0},
    {"T3", CandidateStyle::large_gap, 2.5, kmh_to_mps(16.0), 5.0},
    {"T4", CandidateStyle::follow, 0.0, kmh_to_mps(30.0), 0.0},
  };
}

std::size_t ScenarioConfig::step_count() const
{
  const double steps = std::round(horizon / dt);
  return static_cast<std::size_t>(steps) + 1;
}

void ScenarioConfig::validate() const
{
  road.validate();
  ego.validate();
  if (!positive(horizon) || !positive(dt)) {
    throw ConfigError("scenario: horizon and dt must be positive");
  }
  const double steps = std::round(horizon / dt);
  if (steps < 1.0 || std::abs(steps * dt - horizon) > 1e-9 * std::max(1.0, horizon)) {
    throw ConfigError("scenario: horizon must be a positive multiple of dt");
  }
  if (!positive(ego_initial_speed) || ego_initial_speed > road.speed_limit + kSpeedTolerance) {
    throw ConfigError("scenario: ego initial speed must lie in (0, speed_limit]");
  }
  if (!positive(cyclist_speed)) {
    throw ConfigError("scenario: cyclist speed must be positive");
  }
  if (!positive(initial_gap) || !positive(max_accel) || !positive(follow_gap) ||
    !positive(follow_decel) || !positive(lateral_time_constant))
  {
    throw ConfigError(
      "scenario: initial_gap, max_accel, follow_gap, follow_decel and lateral_time_constant "
      "must be positive");
  }
  if (follow_decel > max_accel + kSpeedTolerance) {
    throw ConfigError("scenario: follow_decel exceeds max_accel");
  }
  if (!std::isfinite(cyclist_y) || cyclist_y > road.centerline_y ||
    cyclist_y < road.centerline_y - road.lane_width)
  {
    throw ConfigError("scenario: cyclist must ride inside the right lane");
  }
  if (candidates.empty()) {
    throw ConfigError("scenario: at least one candidate is required");
  }
  std::optional<double> small, medium, large;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto & c = candidates[i];
    if (c.id.empty()) {
      throw ConfigError("scenario: candidate ids must be nonempty");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (candidates[j].id == c.id) {
        throw ConfigError("scenario: duplicate candidate id '" + c.id + "'");
      }
    }
    if (!positive(c.overtake_speed) || c.overtake_speed > road.speed_limit + kSpeedTolerance) {
      throw ConfigError("candidate '" + c.id + "': overtake_speed must lie in (0, speed_limit]");
    }
    if (c.style == CandidateStyle::follow) {
      if (c.encroachment_duration != 0.0) {
        throw ConfigError("candidate '" + c.id + "': follow style has zero encroachment");
      }
      continue;
    }
    if (c.overtake_speed <= cyclist_speed) {
      throw ConfigError("candidate '" + c.id + "': overtake_speed must exceed the cyclist speed");
    }
    if (!positive(c.lateral_clearance) || !positive(c.encroachment_duration)) {
      throw ConfigError(
        "candidate '" + c.id + "': lateral_clearance and encroachment_duration must be positive");
    }
    auto & slot = c.style == CandidateStyle::small_gap ? small :
      c.style == CandidateStyle::medium_gap ? medium : large;
    slot = c.lateral_clearance;
  }
  if ((small && medium && *small >= *medium) || (medium && large && *medium >= *large) ||
    (small && large && *small >= *large))
  {
    throw ConfigError("scenario: clearances must satisfy small_gap < medium_gap < large_gap");
  }
}

Scenario build_scenario(const ScenarioConfig & config)
{
  config.validate();
  const std::size_t n = config.step_count();
  const double x0 = 0.5 * config.ego.length + config.initial_gap;
  std::vector<EnvAgentState> states;
  states.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    const double t = static_cast<double>(l) * config.dt;
    states.push_back(
      {t, x0 + config.cyclist_speed * t, config.cyclist_y, config.cyclist_speed,
        AgentKind::cyclist, 0.0});
  }
  std::vector<AgentTrack> agents;
  agents.emplace_back("cyclist", std::move(states));
  return Scenario{{config.road, config.ego}, Environment(std::move(agents))};
}

std::vector<Trajectory> generate_candidates(const Scenario & scenario, const ScenarioConfig & config)
{
  config.validate();
  std::vector<Trajectory> out;
  out.reserve(config.candidates.size());
  for (const auto & cand : config.candidates) {
    if (cand.style == CandidateStyle::follow) {
      out.push_back(generate_follow(scenario, config, cand));
    } else {
      out.push_back(generate_overtake(scenario, config, cand));
    }
  }
  return out;
}

}  // namespace reason_eval
