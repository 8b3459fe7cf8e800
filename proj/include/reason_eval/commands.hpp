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

#ifndef REASON_EVAL__COMMANDS_HPP_
#define REASON_EVAL__COMMANDS_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "reason_eval/analysis.hpp"
#include "reason_eval/config.hpp"
#include "reason_eval/scenario.hpp"
#include "reason_eval/scoring.hpp"

namespace reason_eval
{

/// Scenario and candidate set a run operates on: generated from the config, with
/// externally supplied trajectories merged by id and an optional environment override.
struct CandidateSet
{
  Scenario scenario;
  std::vector<Trajectory> candidates;
};

CandidateSet prepare_candidates(const RunConfig & config);

/// Writes trajectories.csv and environment.csv.
CandidateSet run_generate(const RunConfig & config, const std::filesystem::path & out_dir);

/// Writes report.json, scores.csv, timeline.csv, resolved_config.yaml and manifest.json.
/// Warnings (e.g. a zero agent weight) go to `log`.
EvaluationReport run_evaluate(
  const RunConfig & config, const std::filesystem::path & out_dir, std::ostream & log);

/// Writes sweep.csv (ternary table) and regions.json.
SweepResult run_sweep(const RunConfig & config, const std::filesystem::path & out_dir);

/// Writes inverse_<id>.csv with every weight vector won by the candidate.
std::vector<WeightVector> run_invert(
  const RunConfig & config, const std::string & candidate_id,
  const std::filesystem::path & out_dir);

/// Reads a score-series CSV and writes trigger.txt (index or "none").
std::optional<std::size_t> run_monitor(
  const std::filesystem::path & series_csv, double threshold,
  const std::filesystem::path & out_dir, const std::optional<std::string> & column = std::nullopt);

}  // namespace reason_eval

#endif  // REASON_EVAL__COMMANDS_HPP_
