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

#ifndef REASON_EVAL__CORE_MODEL_HPP_
#define REASON_EVAL__CORE_MODEL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace reason_eval
{

inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kTimeTolerance = 1e-9;
inline constexpr double kDefaultDt = 0.1;

/// Ego vehicle configuration at one time step. (x, y) is the geometric center.
struct EgoState
{
  double t{0.0};
  double x{0.0};
  double y{0.0};
  double heading{0.0};  // rad, [-pi, pi)
  double speed{0.0};    // m/s
};

/// Candidate ego trajectory sampled on a uniform time grid.
///
/// Construction validates: at least two states, finite fields, speed >= 0,
/// heading in [-pi, pi), and t_l = t_0 + l * dt within 1e-9 s.
/// Inputs that violate the grid are rejected, never resampled.
class Trajectory
{
public:
  Trajectory(std::string id, double dt, std::vector<EgoState> states);

  const std::string & id() const noexcept { return id_; }
  double dt() const noexcept { return dt_; }
  const std::vector<EgoState> & states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  const EgoState & operator[](std::size_t i) const { return states_[i]; }

private:
  std::string id_;
  double dt_;
  std::vector<EgoState> states_;
};

enum class AgentKind { cyclist, vehicle, pedestrian };

std::string_view to_string(AgentKind kind);
AgentKind agent_kind_from_string(std::string_view name);

struct EnvAgentState
{
  double t{0.0};
  double x{0.0};
  double y{0.0};
  double speed{0.0};
  AgentKind kind{AgentKind::cyclist};
  double heading{0.0};
};

/// One dynamic agent's time-indexed states.
class AgentTrack
{
public:
  AgentTrack(std::string id, std::vector<EnvAgentState> states);

  const std::string & id() const noexcept { return id_; }
  AgentKind kind() const noexcept { return states_.front().kind; }
  const std::vector<EnvAgentState> & states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }

private:
  std::string id_;
  std::vector<EnvAgentState> states_;
};

/// The set of dynamic agents sharing the ego's time grid.
class Environment
{
public:
  Environment() = default;
  explicit Environment(std::vector<AgentTrack> agents);

  const std::vector<AgentTrack> & agents() const noexcept { return agents_; }
  bool empty() const noexcept { return agents_.empty(); }
  bool has_kind(AgentKind kind) const noexcept;

private:
  std::vector<AgentTrack> agents_;
};

/// Throws AlignmentError unless every agent track matches the trajectory's
/// length and timestamps (within 1e-9 s).
void validate_alignment(const Trajectory & trajectory, const Environment & environment);

enum class ReasonKind { policymaker_lane, driver_efficiency, cyclist_safety_comfort };

std::string_view to_string(ReasonKind kind);
ReasonKind reason_kind_from_string(std::string_view name);

struct ReasonSpec
{
  ReasonSpec(std::string id, ReasonKind kind, double alpha);

  std::string id;
  ReasonKind kind;
  double alpha;
};

/// A human agent and its internally weighted reasons (alphas sum to 1).
class AgentSpec
{
public:
  AgentSpec(std::string id, std::vector<ReasonSpec> reasons);

  const std::string & id() const noexcept { return id_; }
  const std::vector<ReasonSpec> & reasons() const noexcept { return reasons_; }
  std::vector<double> alphas() const;

private:
  std::string id_;
  std::vector<ReasonSpec> reasons_;
};

/// Agent weights on the probability simplex together with the ideal distribution.
class WeightVector
{
public:
  /// Uniform ideal distribution.
  explicit WeightVector(std::vector<double> w);
  WeightVector(std::vector<double> w, std::vector<double> w_star);

  const std::vector<double> & w() const noexcept { return w_; }
  const std::vector<double> & w_star() const noexcept { return w_star_; }
  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

private:
  std::vector<double> w_;
  std::vector<double> w_star_;
};

WeightVector make_uniform_weights(std::size_t n);

enum class DistanceMetric
{
  footprint,        // cyclist point to the ego rectangle
  reference_point,  // Euclidean, ego center to cyclist
  lateral,          // |y_ego - y_agent| minus half the ego width, floored at 0
};

std::string_view to_string(DistanceMetric metric);
DistanceMetric distance_metric_from_string(std::string_view name);

/// Constants of the per-step reason functions. k1, k3 in 1/m; k2, k4 in 1/s.
struct ReasonParams
{
  double k1{0.2};
  double k2{0.2};
  double k3{0.2};
  double k4{0.2};
  double d_driver{10.0};
  double t_driver{5.0};
  double d_th{2.0};
  double t_th{3.0};
  DistanceMetric distance_metric{DistanceMetric::footprint};

  /// Throws InvalidArgument unless every constant is finite and > 0.
  void validate() const;
};

}  // namespace reason_eval

#endif  // REASON_EVAL__CORE_MODEL_HPP_
