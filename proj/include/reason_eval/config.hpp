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

#ifndef REASON_EVAL__CONFIG_HPP_
#define REASON_EVAL__CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "reason_eval/analysis.hpp"
#include "reason_eval/core_model.hpp"
#include "reason_eval/scenario.hpp"
#include "reason_eval/scoring.hpp"

namespace reason_eval
{

struct AnalysisConfig
{
  unsigned resolution{100};
  double sweep_tie_threshold{kDefaultSweepTieThreshold};
  double tie_epsilon{kDefaultTieEpsilon};
  double monitor_threshold{kDefaultMonitorThreshold};
};

struct InputsConfig
{
  std::optional<std::filesystem::path> trajectories;  // merged into the generated set by id
  std::optional<std::filesystem::path> environment;   // replaces the generated environment
  std::optional<std::filesystem::path> score_series;  // monitor input
};

/// Everything one CLI run needs. Speeds are km/h in the YAML document and m/s here.
struct RunConfig
{
  ScenarioConfig scenario{};
  ReasonParams reasons{};
  std::vector<AgentSpec> agents;
  WeightVector weights{make_uniform_weights(3)};
  AnalysisConfig analysis{};
  InputsConfig inputs{};
  std::filesystem::path output_dir{"out"};
};

/// Policymaker, driver and cyclist with one reason each and equal weights.
RunConfig default_run_config();

/// Parses a YAML document. Omitted keys take the defaults; unknown keys, invalid
/// values and weights that do not sum to 1 raise InvalidArgument naming the field.
/// Relative input paths resolve against `base_dir`.
RunConfig parse_config(const std::string & yaml_text, const std::filesystem::path & base_dir = {});

/// Reads and parses a config file; a missing file raises IoError.
RunConfig load_config(const std::filesystem::path & path);

/// Fully resolved YAML (defaults included) for provenance.
std::string to_yaml(const RunConfig & config);

}  // namespace reason_eval

#endif  // REASON_EVAL__CONFIG_HPP_
