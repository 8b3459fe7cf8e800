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

#ifndef REASON_EVAL__IO_HPP_
#define REASON_EVAL__IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reason_eval/analysis.hpp"
#include "reason_eval/core_model.hpp"
#include "reason_eval/scoring.hpp"

namespace reason_eval::io
{

/// Shortest text guaranteed to parse back to the same double (17 significant digits).
std::string format_full(double value);
/// Fixed six decimals, used for score tables.
std::string format_fixed6(double value);

// Trajectory interchange: header `id,t,x,y,heading,speed`, one row per state.
void write_trajectories_csv(std::ostream & out, std::span<const Trajectory> trajectories);
std::vector<Trajectory> read_trajectories_csv(std::istream & in);

// Environment interchange: header `id,t,x,y,heading,speed,kind`.
void write_environment_csv(std::ostream & out, const Environment & environment);
Environment read_environment_csv(std::istream & in);

std::string report_to_json(const EvaluationReport & report);

/// Long-format score table, one row per candidate x agent x reason.
void write_scores_csv(std::ostream & out, const EvaluationReport & report);

/// `t,S_<id>...` running unified score per candidate.
void write_timeline_csv(
  std::ostream & out, std::span<const double> times, std::span<const std::string> ids,
  std::span<const std::vector<double>> series);

/// Ternary table `w1,w2,w3,B,S_<id>...,best`.
void write_sweep_csv(std::ostream & out, const SweepResult & sweep);

std::string regions_to_json(const SweepResult & sweep, const DecisionRegions & regions);

/// `w1,...,wn` rows.
void write_weight_set_csv(std::ostream & out, std::span<const WeightVector> weights);

/// Reads one numeric column from a headed CSV. Without `column`, uses `score`
/// if present, else the only column other than `t`/`index`.
std::vector<double> read_score_series_csv(
  std::istream & in, const std::optional<std::string> & column = std::nullopt);

std::string read_file(const std::filesystem::path & path);
void write_file(const std::filesystem::path & path, const std::string & content);

}  // namespace reason_eval::io

#endif  // REASON_EVAL__IO_HPP_
