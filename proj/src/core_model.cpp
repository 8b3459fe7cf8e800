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

#include "reason_eval/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

#include "reason_eval/errors.hpp"

namespace reason_eval
{
namespace
{

bool finite(double v) { return std::isfinite(v); }

double sum(const std::vector<double> & v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

Trajectory::Trajectory(std::string id, double dt, std::vector<EgoState> states)
: id_(std::move(id)), dt_(dt), states_(std::move(states))
{
  if (!finite(dt_) || dt_ <= 0.0) {
    throw InvalidArgument("trajectory '" + id_ + "': dt must be positive");
  }
  if (states_.size() < 2) {
    throw InvalidArgument("trajectory '" + id_ + "': needs at least 2 states");
  }
  const double t0 = states_.front().t;
  for (std::size_t l = 0; l < states_.size(); ++l) {
    const auto & s = states_[l];
    if (!finite(s.t) || !finite(s.x) || !finite(s.y) || !finite(s.heading) || !finite(s.speed)) {
      throw InvalidArgument(
        "trajectory '" + id_ + "': non-finite field at index " + std::to_string(l));
    }
    if (s.speed < 0.0) {
      throw InvalidArgument(
        "trajectory '" + id_ + "': negative speed at index " + std::to_string(l));
    }
    if (s.heading < -std::numbers::pi || s.heading >= std::numbers::pi) {
      throw InvalidArgument(
        "trajectory '" + id_ + "': heading outside [-pi, pi) at index " + std::to_string(l));
    }
    const double expected = t0 + static_cast<double>(l) * dt_;
    if (std::abs(s.t - expected) > kTimeTolerance) {
      throw InvalidArgument(
        "trajectory '" + id_ + "': non-uniform time grid at index " + std::to_string(l));
    }
  }
}

std::string_view to_string(AgentKind kind)
{
  switch (kind) {
    case AgentKind::cyclist:
      return "cyclist";
    case AgentKind::vehicle:
      return "vehicle";
    case AgentKind::pedestrian:
      return "pedestrian";
  }
  return "unknown";
}

AgentKind agent_kind_from_string(std::string_view name)
{
  if (name == "cyclist") return AgentKind::cyclist;
  if (name == "vehicle") return AgentKind::vehicle;
  if (name == "pedestrian") return AgentKind::pedestrian;
  throw InvalidArgument("unknown agent kind '" + std::string(name) + "'");
}

AgentTrack::AgentTrack(std::string id, std::vector<EnvAgentState> states)
: id_(std::move(id)), states_(std::move(states))
{
  if (states_.empty()) {
    throw InvalidArgument("agent '" + id_ + "': empty track");
  }
  for (std::size_t l = 0; l < states_.size(); ++l) {
    const auto & s = states_[l];
    if (!finite(s.t) || !finite(s.x) || !finite(s.y) || !finite(s.speed) || !finite(s.heading)) {
      throw InvalidArgument("agent '" + id_ + "': non-finite field at index " + std::to_string(l));
    }
    if (s.speed < 0.0) {
      throw InvalidArgument("agent '" + id_ + "': negative speed at index " + std::to_string(l));
    }
    if (s.kind != states_.front().kind) {
      throw InvalidArgument("agent '" + id_ + "': kind changes along the track");
    }
  }
}

Environment::Environment(std::vector<AgentTrack> agents) : agents_(std::move(agents)) {}

bool Environment::has_kind(AgentKind kind) const noexcept
{
  return std::any_of(
    agents_.begin(), agents_.end(), [kind](const AgentTrack & a) { return a.kind() == kind; });
}

void validate_alignment(const Trajectory & trajectory, const Environment & environment)
{
  const auto & ego = trajectory.states();
  for (std::size_t q = 0; q < environment.agents().size(); ++q) {
    const auto & track = environment.agents()[q].states();
    if (track.size() != ego.size()) {
      std::ostringstream msg;
      msg << "alignment error: agent " << q << " ('" << environment.agents()[q].id() << "') has "
          << track.size() << " states, trajectory '" << trajectory.id() << "' has " << ego.size();
      throw AlignmentError(msg.str(), q, std::min(track.size(), ego.size()));
    }
    for (std::size_t l = 0; l < ego.size(); ++l) {
      if (std::abs(track[l].t - ego[l].t) > kTimeTolerance) {
        std::ostringstream msg;
        msg << "alignment error: agent " << q << " ('" << environment.agents()[q].id()
            << "') timestamp mismatch at index " << l;
        throw AlignmentError(msg.str(), q, l);
      }
    }
  }
}

std::string_view to_string(ReasonKind kind)
{
  switch (kind) {
    case ReasonKind::policymaker_lane:
      return "policymaker_lane";
    case ReasonKind::driver_efficiency:
      return "driver_efficiency";
    case ReasonKind::cyclist_safety_comfort:
      return "cyclist_safety_comfort";
  }
  return "unknown";
}

ReasonKind reason_kind_from_string(std::string_view name)
{
  if (name == "policymaker_lane") return ReasonKind::policymaker_lane;
  if (name == "driver_efficiency") return ReasonKind::driver_efficiency;
  if (name == "cyclist_safety_comfort") return ReasonKind::cyclist_safety_comfort;
  throw InvalidArgument("unknown reason kind '" + std::string(name) + "'");
}

ReasonSpec::ReasonSpec(std::string id_, ReasonKind kind_, double alpha_)
: id(std::move(id_)), kind(kind_), alpha(alpha_)
{
  if (!finite(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw InvalidArgument("reason '" + id + "': alpha must lie in [0, 1]");
  }
}

AgentSpec::AgentSpec(std::string id, std::vector<ReasonSpec> reasons)
: id_(std::move(id)), reasons_(std::move(reasons))
{
  if (reasons_.empty()) {
    throw InvalidArgument("agent '" + id_ + "': needs at least one reason");
  }
  if (std::abs(sum(alphas()) - 1.0) > kSumTolerance) {
    throw InvalidArgument("agent '" + id_ + "': reason alphas must sum to 1");
  }
}

std::vector<double> AgentSpec::alphas() const
{
  std::vector<double> out;
  out.reserve(reasons_.size());
  for (const auto & r : reasons_) {
    out.push_back(r.alpha);
  }
  return out;
}

WeightVector::WeightVector(std::vector<double> w)
: WeightVector(w, std::vector<double>(w.size(), w.empty() ? 0.0 : 1.0 / static_cast<double>(w.size())))
{
}

WeightVector::WeightVector(std::vector<double> w, std::vector<double> w_star)
: w_(std::move(w)), w_star_(std::move(w_star))
{
  if (w_.empty()) {
    throw InvalidArgument("weights must be nonempty");
  }
  if (w_.size() != w_star_.size()) {
    throw InvalidArgument("weights and ideal weights differ in length");
  }
  for (double v : w_) {
    if (!finite(v) || v < 0.0 || v > 1.0) {
      throw InvalidArgument("weights must lie in [0, 1]");
    }
  }
  for (double v : w_star_) {
    if (!finite(v) || v <= 0.0 || v > 1.0) {
      throw InvalidArgument("ideal weights must lie in (0, 1]");
    }
  }
  if (std::abs(sum(w_) - 1.0) > kSumTolerance) {
    throw InvalidArgument("weights must sum to 1");
  }
  if (std::abs(sum(w_star_) - 1.0) > kSumTolerance) {
    throw InvalidArgument("ideal weights must sum to 1");
  }
}

WeightVector make_uniform_weights(std::size_t n)
{
  if (n == 0) {
    throw InvalidArgument("make_uniform_weights: n must be at least 1");
  }
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  return WeightVector(w, w);
}

std::string_view to_string(DistanceMetric metric)
{
  switch (metric) {
    case DistanceMetric::footprint:
      return "footprint";
    case DistanceMetric::reference_point:
      return "reference_point";
    case DistanceMetric::lateral:
      return "lateral";
  }
  return "unknown";
}

DistanceMetric distance_metric_from_string(std::string_view name)
{
  if (name == "footprint") return DistanceMetric::footprint;
  if (name == "reference_point") return DistanceMetric::reference_point;
  if (name == "lateral") return DistanceMetric::lateral;
  throw InvalidArgument("unknown distance metric '" + std::string(name) + "'");
}

void ReasonParams::validate() const
{
  const std::pair<const char *, double> fields[] = {
    {"k1", k1}, {"k2", k2}, {"k3", k3}, {"k4", k4}, {"d_driver", d_driver},
    {"t_driver", t_driver}, {"d_th", d_th}, {"t_th", t_th}};
  for (const auto & [name, value] : fields) {
    if (!finite(value) || value <= 0.0) {
      throw InvalidArgument(std::string("reason parameter '") + name + "' must be positive");
    }
  }
}

}  // namespace reason_eval
