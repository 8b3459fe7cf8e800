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

#include "reason_eval/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reason_eval/errors.hpp"

namespace reason_eval
{
namespace
{

void compositions(
  unsigned remaining, std::size_t slots, std::vector<unsigned> & prefix,
  std::vector<std::vector<unsigned>> & out)
{
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned c = 0; c <= remaining; ++c) {
    prefix.push_back(c);
    compositions(remaining - c, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SimplexGrid make_simplex_grid(unsigned resolution, std::size_t dimension)
{
  if (resolution < 1) {
    throw InvalidArgument("simplex grid: resolution must be at least 1");
  }
  if (dimension < 1) {
    throw InvalidArgument("simplex grid: dimension must be at least 1");
  }
  SimplexGrid grid{resolution, dimension, {}, {}};
  std::vector<unsigned> prefix;
  compositions(resolution, dimension, prefix, grid.lattice);
  grid.points.reserve(grid.lattice.size());
  const auto r = static_cast<double>(resolution);
  for (const auto & c : grid.lattice) {
    std::vector<double> p;
    p.reserve(c.size());
    for (unsigned v : c) {
      p.push_back(static_cast<double>(v) / r);
    }
    grid.points.push_back(std::move(p));
  }
  return grid;
}

bool DecisionCell::is_interior() const noexcept
{
  return std::all_of(lattice.begin(), lattice.end(), [](unsigned c) { return c > 0; });
}

void label_cell(DecisionCell & cell, std::span<const std::string> ids, double tie_threshold)
{
  if (cell.scores.empty() || cell.scores.size() != ids.size()) {
    throw InvalidArgument("label_cell: score count does not match candidate count");
  }
  const auto top = std::max_element(cell.scores.begin(), cell.scores.end());
  const auto top_index = static_cast<std::size_t>(top - cell.scores.begin());
  cell.tie_group.clear();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    if (*top - cell.scores[a] < tie_threshold) {
      cell.tie_group.push_back(ids[a]);
    }
  }
  std::sort(cell.tie_group.begin(), cell.tie_group.end());
  cell.best = cell.tie_group.size() > 1 ? std::string(kTieLabel) : ids[top_index];
}

SweepResult simplex_sweep(
  std::span<const ReasonScores> candidates, std::span<const AgentSpec> agents,
  unsigned resolution, double tie_threshold, std::optional<std::vector<double>> ideal)
{
  if (candidates.empty()) {
    throw InvalidArgument("simplex_sweep: no candidates");
  }
  if (!(tie_threshold >= 0.0)) {
    throw InvalidArgument("simplex_sweep: tie threshold must be non-negative");
  }
  const auto grid = make_simplex_grid(resolution, agents.size());
  const std::vector<double> w_star = ideal.value_or(
    std::vector<double>(agents.size(), 1.0 / static_cast<double>(agents.size())));

  SweepResult out;
  out.tie_threshold = tie_threshold;
  for (const auto & c : candidates) {
    out.candidate_ids.push_back(c.id);
  }

  // S_i does not depend on w; compute it once per candidate.
  const WeightVector probe(w_star, w_star);
  std::vector<std::vector<double>> agent_scores;
  agent_scores.reserve(candidates.size());
  for (const auto & c : candidates) {
    agent_scores.push_back(combine_scores(c, agents, probe).agent_scores);
  }

  out.cells.reserve(grid.points.size());
  for (std::size_t g = 0; g < grid.points.size(); ++g) {
    WeightVector weights(grid.points[g], w_star);
    const double b = balance(weights);
    std::vector<double> scores;
    scores.reserve(candidates.size());
    for (const auto & s : agent_scores) {
      scores.push_back(b * unbalanced_score(s, weights));
    }
    DecisionCell cell{grid.lattice[g], std::move(weights), std::move(scores), b, {}, {}};
    label_cell(cell, out.candidate_ids, tie_threshold);
    out.cells.push_back(std::move(cell));
  }
  return out;
}

SweepResult simplex_sweep(
  std::span<const Trajectory> candidates, const Environment & environment,
  std::span<const AgentSpec> agents, const ReasonParams & params,
  const EvaluationGeometry & geometry, unsigned resolution, double tie_threshold,
  std::optional<std::vector<double>> ideal)
{
  std::vector<ReasonScores> scores;
  scores.reserve(candidates.size());
  for (const auto & t : candidates) {
    scores.push_back(compute_reason_scores(t, environment, agents, params, geometry));
  }
  return simplex_sweep(scores, agents, resolution, tie_threshold, std::move(ideal));
}

std::size_t DecisionRegions::count(const std::string & id) const
{
  if (id == kTieLabel) return ties.size();
  const auto it = regions.find(id);
  return it == regions.end() ? 0 : it->second.size();
}

DecisionRegions decision_regions(const SweepResult & sweep)
{
  if (sweep.cells.empty()) {
    throw InvalidArgument("decision_regions: no cells");
  }
  DecisionRegions out;
  for (const auto & id : sweep.candidate_ids) {
    out.regions[id];
  }
  for (std::size_t k = 0; k < sweep.cells.size(); ++k) {
    const auto & cell = sweep.cells[k];
    if (cell.is_tie()) {
      out.ties.push_back(k);
    } else {
      out.regions[cell.best].push_back(k);
    }
  }
  return out;
}

std::vector<WeightVector> inverse_region(const SweepResult & sweep, const std::string & candidate_id)
{
  if (std::find(sweep.candidate_ids.begin(), sweep.candidate_ids.end(), candidate_id) ==
    sweep.candidate_ids.end())
  {
    throw InvalidArgument("inverse_region: unknown candidate id '" + candidate_id + "'");
  }
  std::vector<WeightVector> out;
  for (const auto & cell : sweep.cells) {
    if (!cell.is_tie() && cell.best == candidate_id) {
      out.push_back(cell.weights);
    }
  }
  return out;
}

const DecisionCell & nearest_interior_cell(const SweepResult & sweep, std::span<const double> target)
{
  const DecisionCell * best = nullptr;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const auto & cell : sweep.cells) {
    if (!cell.is_interior() || cell.weights.size() != target.size()) continue;
    double d = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      const double e = cell.weights[i] - target[i];
      d += e * e;
    }
    if (d < best_dist) {
      best_dist = d;
      best = &cell;
    }
  }
  if (best == nullptr) {
    throw InvalidArgument("nearest_interior_cell: sweep has no interior cell of that dimension");
  }
  return *best;
}

std::optional<std::size_t> monitor_scores(std::span<const double> series, double threshold)
{
  if (series.empty()) {
    throw InvalidArgument("monitor_scores: empty score series");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw InvalidArgument("monitor_scores: threshold must lie in (0, 1)");
  }
  for (std::size_t l = 0; l < series.size(); ++l) {
    if (std::isnan(series[l])) {
      throw InvalidArgument("monitor_scores: NaN at index " + std::to_string(l));
    }
    if (series[l] < threshold) {
      return l;
    }
  }
  return std::nullopt;
}

}  // namespace reason_eval
