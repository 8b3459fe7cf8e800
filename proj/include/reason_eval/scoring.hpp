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

#ifndef REASON_EVAL__SCORING_HPP_
#define REASON_EVAL__SCORING_HPP_

#include <span>
#include <string>
#include <vector>

#include "reason_eval/core_model.hpp"
#include "reason_eval/reasons.hpp"
#include "reason_eval/scenario.hpp"

namespace reason_eval
{

inline constexpr double kDefaultTieEpsilon = 1e-9;

/// d_veh and d_vc for every step. d_vc is measured to the nearest cyclist.
std::vector<GeometryInputs> geometry_trace(
  const Trajectory & trajectory, const Environment & environment,
  const EvaluationGeometry & geometry, DistanceMetric metric);

/// Per-step scores f_l of one reason, clocks threaded from zero in time order.
std::vector<double> reason_step_scores(
  const Trajectory & trajectory, const Environment & environment, ReasonKind kind,
  const ReasonParams & params, const EvaluationGeometry & geometry);

/// Mean of the per-step scores over all p + 1 states.
double reason_trajectory_score(
  const Trajectory & trajectory, const Environment & environment, ReasonKind kind,
  const ReasonParams & params, const EvaluationGeometry & geometry);

/// S_i = sum_b alpha_b F_b.
double agent_score(std::span<const double> reason_scores, std::span<const double> alphas);

/// S_w = sum_i w_i S_i.
double unbalanced_score(std::span<const double> agent_scores, const WeightVector & weights);

/// Balance penalty B(w, w*): (1 - RMS(w - w*) / |w*|_2) * min_i(w_i / w*_i).
/// 1 at w = w*, 0 as soon as any agent weight is zero.
double balance(const WeightVector & weights);

/// Reason-level scores of one candidate: reason_scores[i][b] = F_ib.
struct ReasonScores
{
  std::string id;
  std::vector<std::vector<double>> reason_scores;
};

ReasonScores compute_reason_scores(
  const Trajectory & trajectory, const Environment & environment,
  std::span<const AgentSpec> agents, const ReasonParams & params,
  const EvaluationGeometry & geometry);

struct CandidateEvaluation
{
  std::string id;
  std::vector<std::vector<double>> reason_scores;
  std::vector<double> agent_scores;
  double unbalanced{0.0};
  double balance{0.0};
  double total{0.0};
};

/// Combines precomputed F_ib with a weight vector (Eqs. 4-6 and the product with B).
CandidateEvaluation combine_scores(
  const ReasonScores & scores, std::span<const AgentSpec> agents, const WeightVector & weights);

/// S(T) = B(w) * S_w(T).
double total_score(
  const Trajectory & trajectory, const Environment & environment,
  std::span<const AgentSpec> agents, const WeightVector & weights, const ReasonParams & params,
  const EvaluationGeometry & geometry);

struct ScoredCandidate
{
  std::string id;
  double score;
};

struct Ranking
{
  std::vector<std::string> order;               // descending score
  std::vector<std::vector<std::string>> ties;   // groups of size >= 2, id-ordered
};

/// Sorts by score descending. Candidates within tie_epsilon of a group's leading
/// score join that group; each group is emitted in id order.
Ranking rank_candidates(
  std::span<const ScoredCandidate> candidates, double tie_epsilon = kDefaultTieEpsilon);

struct EvaluationReport
{
  std::vector<std::string> agent_ids;
  std::vector<std::vector<std::string>> reason_ids;
  WeightVector weights;
  std::vector<CandidateEvaluation> candidates;
  Ranking ranking;
  double tie_epsilon{kDefaultTieEpsilon};
};

EvaluationReport evaluate_candidates(
  std::span<const Trajectory> candidates, const Environment & environment,
  std::span<const AgentSpec> agents, const WeightVector & weights, const ReasonParams & params,
  const EvaluationGeometry & geometry, double tie_epsilon = kDefaultTieEpsilon);

/// Running unified score after each step: B * sum_i w_i sum_b alpha_ib * mean(f_ib[0..l]).
std::vector<double> running_total_score(
  const Trajectory & trajectory, const Environment & environment,
  std::span<const AgentSpec> agents, const WeightVector & weights, const ReasonParams & params,
  const EvaluationGeometry & geometry);

}  // namespace reason_eval

#endif  // REASON_EVAL__SCORING_HPP_
