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

#include "reason_eval/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "reason_eval/errors.hpp"

namespace reason_eval
{
namespace
{

bool needs_cyclist(ReasonKind kind)
{
  return kind == ReasonKind::driver_efficiency || kind == ReasonKind::cyclist_safety_comfort;
}

std::vector<double> step_scores_from_trace(
  std::span<const GeometryInputs> trace, ReasonKind kind, double dt, const ReasonParams & params)
{
  std::vector<double> out;
  out.reserve(trace.size());
  FollowClocks clocks{};
  for (const auto & g : trace) {
    switch (kind) {
      case ReasonKind::policymaker_lane:
        out.push_back(policymaker_step(g, params));
        break;
      case ReasonKind::driver_efficiency: {
        const auto r = driver_step(g, clocks, dt, params);
        out.push_back(r.score);
        clocks = r.clocks;
        break;
      }
      case ReasonKind::cyclist_safety_comfort: {
        const auto r = cyclist_step(g, clocks, dt, params);
        out.push_back(r.score);
        clocks = r.clocks;
        break;
      }
    }
  }
  return out;
}

double mean(std::span<const double> v)
{
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void check_inputs(
  const Trajectory & trajectory, const Environment & environment,
  std::span<const AgentSpec> agents, const ReasonParams & params)
{
  params.validate();
  validate_alignment(trajectory, environment);
  for (const auto & agent : agents) {
    for (const auto & reason : agent.reasons()) {
      if (needs_cyclist(reason.kind) && !environment.has_kind(AgentKind::cyclist)) {
        throw InvalidArgument(
          "reason '" + reason.id + "' needs a cyclist in the environment");
      }
    }
  }
}

}  // namespace

std::vector<GeometryInputs> geometry_trace(
  const Trajectory & trajectory, const Environment & environment,
  const EvaluationGeometry & geometry, DistanceMetric metric)
{
  validate_alignment(trajectory, environment);
  std::vector<GeometryInputs> out;
  out.reserve(trajectory.size());
  for (std::size_t l = 0; l < trajectory.size(); ++l) {
    const auto & s = trajectory[l];
    double d_vc = std::numeric_limits<double>::infinity();
    for (const auto & agent : environment.agents()) {
      if (agent.kind() == AgentKind::cyclist) {
        d_vc = std::min(d_vc, ego_agent_distance(s, geometry.ego, agent.states()[l], metric));
      }
    }
    out.push_back({signed_lane_distance(s, geometry.road, geometry.ego.width), d_vc});
  }
  return out;
}

std::vector<double> reason_step_scores(
  const Trajectory & trajectory, const Environment & environment, ReasonKind kind,
  const ReasonParams & params, const EvaluationGeometry & geometry)
{
  const AgentSpec probe("probe", {ReasonSpec("probe", kind, 1.0)});
  check_inputs(trajectory, environment, std::span(&probe, 1), params);
  const auto trace = geometry_trace(trajectory, environment, geometry, params.distance_metric);
  return step_scores_from_trace(trace, kind, trajectory.dt(), params);
}

double reason_trajectory_score(
  const Trajectory & trajectory, const Environment & environment, ReasonKind kind,
  const ReasonParams & params, const EvaluationGeometry & geometry)
{
  return mean(reason_step_scores(trajectory, environment, kind, params, geometry));
}

double agent_score(std::span<const double> reason_scores, std::span<const double> alphas)
{
  if (reason_scores.size() != alphas.size()) {
    throw InvalidArgument("agent_score: alpha count does not match reason count");
  }
  return std::inner_product(reason_scores.begin(), reason_scores.end(), alphas.begin(), 0.0);
}

double unbalanced_score(std::span<const double> agent_scores, const WeightVector & weights)
{
  if (agent_scores.size() != weights.size()) {
    throw InvalidArgument("unbalanced_score: weight count does not match agent count");
  }
  return std::inner_product(agent_scores.begin(), agent_scores.end(), weights.w().begin(), 0.0);
}

double balance(const WeightVector & weights)
{
  const auto & w = weights.w();
  const auto & ideal = weights.w_star();
  const auto n = static_cast<double>(w.size());
  double sq_dev = 0.0;
  double sq_ideal = 0.0;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(ideal[i] > 0.0)) {
      throw InvalidArgument("balance: ideal weights must be nonzero");
    }
    const double d = w[i] - ideal[i];
    sq_dev += d * d;
    sq_ideal += ideal[i] * ideal[i];
    min_ratio = std::min(min_ratio, w[i] / ideal[i]);
  }
  const double rms = std::sqrt(sq_dev / n);
  return (1.0 - rms / std::sqrt(sq_ideal)) * min_ratio;
}

ReasonScores compute_reason_scores(
  const Trajectory & trajectory, const Environment & environment,
  std::span<const AgentSpec> agents, const ReasonParams & params,
  const EvaluationGeometry & geometry)
{
  check_inputs(trajectory, environment, agents, params);
  const auto trace = geometry_trace(trajectory, environment, geometry, params.distance_metric);
  ReasonScores out{trajectory.id(), {}};
  out.reason_scores.reserve(agents.size());
  for (const auto & agent : agents) {
    std::vector<double> row;
    for (const auto & reason : agent.reasons()) {
      row.push_back(mean(step_scores_from_trace(trace, reason.kind, trajectory.dt(), params)));
    }
    out.reason_scores.push_back(std::move(row));
  }
  return out;
}

CandidateEvaluation combine_scores(
  const ReasonScores & scores, std::span<const AgentSpec> agents, const WeightVector & weights)
{
  if (scores.reason_scores.size() != agents.size() || weights.size() != agents.size()) {
    throw InvalidArgument("combine_scores: agent, weight and score counts differ");
  }
  CandidateEvaluation out;
  out.id = scores.id;
  out.reason_scores = scores.reason_scores;
  out.agent_scores.reserve(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    out.agent_scores.push_back(agent_score(scores.reason_scores[i], agents[i].alphas()));
  }
  out.unbalanced = unbalanced_score(out.agent_scores, weights);
  out.balance = balance(weights);
  out.total = out.balance * out.unbalanced;
  return out;
}

double total_score(
  const Trajectory & trajectory, const Environment & environment,
  std::span<const AgentSpec> agents, const WeightVector & weights, const ReasonParams & params,
  const EvaluationGeometry & geometry)
{
  const auto scores = compute_reason_scores(trajectory, environment, agents, params, geometry);
  return combine_scores(scores, agents, weights).total;
}

Ranking rank_candidates(std::span<const ScoredCandidate> candidates, double tie_epsilon)
{
  if (candidates.empty()) {
    throw InvalidArgument("rank_candidates: no candidates");
  }
  std::vector<ScoredCandidate> sorted(candidates.begin(), candidates.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto & a, const auto & b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });

  Ranking out;
  std::size_t begin = 0;
  while (begin < sorted.size()) {
    std::size_t end = begin + 1;
    while (end < sorted.size() && sorted[begin].score - sorted[end].score < tie_epsilon) {
      ++end;
    }
    std::vector<std::string> group;
    for (std::size_t k = begin; k < end; ++k) {
      group.push_back(sorted[k].id);
    }
    std::sort(group.begin(), group.end());
    out.order.insert(out.order.end(), group.begin(), group.end());
    if (group.size() > 1) {
      out.ties.push_back(std::move(group));
    }
    begin = end;
  }
  return out;
}

EvaluationReport evaluate_candidates(
  std::span<const Trajectory> candidates, const Environment & environment,
  std::span<const AgentSpec> agents, const WeightVector & weights, const ReasonParams & params,
  const EvaluationGeometry & geometry, double tie_epsilon)
{
  if (candidates.empty()) {
    throw InvalidArgument("evaluate_candidates: no candidates");
  }
  EvaluationReport report{{}, {}, weights, {}, {}, tie_epsilon};
  for (const auto & agent : agents) {
    report.agent_ids.push_back(agent.id());
    std::vector<std::string> ids;
    for (const auto & reason : agent.reasons()) {
      ids.push_back(reason.id);
    }
    report.reason_ids.push_back(std::move(ids));
  }
  std::vector<ScoredCandidate> scored;
  for (const auto & trajectory : candidates) {
    const auto scores = compute_reason_scores(trajectory, environment, agents, params, geometry);
    report.candidates.push_back(combine_scores(scores, agents, weights));
    scored.push_back({trajectory.id(), report.candidates.back().total});
  }
  report.ranking = rank_candidates(scored, tie_epsilon);
  return report;
}

std::vector<double> running_total_score(
  const Trajectory & trajectory, const Environment & environment,
  std::span<const AgentSpec> agents, const WeightVector & weights, const ReasonParams & params,
  const EvaluationGeometry & geometry)
{
  check_inputs(trajectory, environment, agents, params);
  if (weights.size() != agents.size()) {
    throw InvalidArgument("running_total_score: weight count does not match agent count");
  }
  const auto trace = geometry_trace(trajectory, environment, geometry, params.distance_metric);
  std::vector<double> weighted(trajectory.size(), 0.0);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (const auto & reason : agents[i].reasons()) {
      const auto f = step_scores_from_trace(trace, reason.kind, trajectory.dt(), params);
      double cumulative = 0.0;
      for (std::size_t l = 0; l < f.size(); ++l) {
        cumulative += f[l];
        weighted[l] += weights[i] * reason.alpha * cumulative / static_cast<double>(l + 1);
      }
    }
  }
  const double b = balance(weights);
  for (auto & v : weighted) {
    v *= b;
  }
  return weighted;
}

}  // namespace reason_eval
