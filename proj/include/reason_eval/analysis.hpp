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

#ifndef REASON_EVAL__ANALYSIS_HPP_
#define REASON_EVAL__ANALYSIS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reason_eval/core_model.hpp"
#include "reason_eval/scoring.hpp"

namespace reason_eval
{

inline constexpr double kDefaultSweepTieThreshold = 1e-6;
inline constexpr double kDefaultMonitorThreshold = 0.7;
inline constexpr const char * kTieLabel = "tie";

/// Regular lattice on the probability simplex: all (c_1, ..., c_n) / R with sum c = R.
struct SimplexGrid
{
  unsigned resolution{0};
  std::size_t dimension{0};
  std::vector<std::vector<unsigned>> lattice;  // integer coordinates, lexicographic order
  std::vector<std::vector<double>> points;     // lattice / R
};

SimplexGrid make_simplex_grid(unsigned resolution, std::size_t dimension = 3);

struct DecisionCell
{
  std::vector<unsigned> lattice;
  WeightVector weights;
  std::vector<double> scores;  // S per candidate, candidate order of the sweep
  double balance{0.0};
  std::string best;                     // winning id, or "tie"
  std::vector<std::string> tie_group;   // ids within the tie threshold of the top score

  bool is_tie() const noexcept { return best == kTieLabel; }
  bool is_interior() const noexcept;
};

struct SweepResult
{
  std::vector<std::string> candidate_ids;
  double tie_threshold{kDefaultSweepTieThreshold};
  std::vector<DecisionCell> cells;
};

/// Labels one cell from its scores: argmax, or a tie when the top two are closer
/// than tie_threshold.
void label_cell(DecisionCell & cell, std::span<const std::string> ids, double tie_threshold);

/// Sweeps the weight simplex reusing precomputed F_ib; weights only enter S_w and B.
/// `ideal` defaults to uniform.
SweepResult simplex_sweep(
  std::span<const ReasonScores> candidates, std::span<const AgentSpec> agents,
  unsigned resolution, double tie_threshold = kDefaultSweepTieThreshold,
  std::optional<std::vector<double>> ideal = std::nullopt);

SweepResult simplex_sweep(
  std::span<const Trajectory> candidates, const Environment & environment,
  std::span<const AgentSpec> agents, const ReasonParams & params,
  const EvaluationGeometry & geometry, unsigned resolution,
  double tie_threshold = kDefaultSweepTieThreshold,
  std::optional<std::vector<double>> ideal = std::nullopt);

struct DecisionRegions
{
  std::map<std::string, std::vector<std::size_t>> regions;  // candidate -> cell indices
  std::vector<std::size_t> ties;

  std::size_t count(const std::string & id) const;
};

DecisionRegions decision_regions(const SweepResult & sweep);

/// Weight vectors of all non-tie cells won by `candidate_id` (possibly empty).
std::vector<WeightVector> inverse_region(const SweepResult & sweep, const std::string & candidate_id);

/// Interior cell (all weights > 0) closest to `target` in Euclidean distance.
const DecisionCell & nearest_interior_cell(
  const SweepResult & sweep, std::span<const double> target);

/// First index whose score is strictly below the threshold.
std::optional<std::size_t> monitor_scores(
  std::span<const double> series, double threshold = kDefaultMonitorThreshold);

}  // namespace reason_eval

#endif  // REASON_EVAL__ANALYSIS_HPP_
