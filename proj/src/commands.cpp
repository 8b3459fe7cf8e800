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

#include "reason_eval/commands.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "reason_eval/errors.hpp"
#include "reason_eval/io.hpp"

namespace reason_eval
{
namespace
{

void write_manifest(
  const std::filesystem::path & out_dir, const std::string & command,
  const std::vector<std::string> & outputs)
{
  nlohmann::json j;
  j["tool"] = "reason-eval";
  j["version"] = REASON_EVAL_VERSION;
  j["command"] = command;
  j["outputs"] = outputs;
  io::write_file(out_dir / (command + "_manifest.json"), j.dump(2) + "\n");
}

}  // namespace

CandidateSet prepare_candidates(const RunConfig & config)
{
  CandidateSet set{build_scenario(config.scenario), {}};
  set.candidates = generate_candidates(set.scenario, config.scenario);
  if (config.inputs.environment) {
    std::istringstream in(io::read_file(*config.inputs.environment));
    set.scenario.environment = io::read_environment_csv(in);
  }
  if (config.inputs.trajectories) {
    std::istringstream in(io::read_file(*config.inputs.trajectories));
    for (auto & external : io::read_trajectories_csv(in)) {
      auto it = std::find_if(set.candidates.begin(), set.candidates.end(), [&](const auto & t) {
          return t.id() == external.id();
        });
      if (it != set.candidates.end()) {
        *it = std::move(external);
      } else {
        set.candidates.push_back(std::move(external));
      }
    }
  }
  for (const auto & t : set.candidates) {
    validate_alignment(t, set.scenario.environment);
  }
  return set;
}

CandidateSet run_generate(const RunConfig & config, const std::filesystem::path & out_dir)
{
  auto set = prepare_candidates(config);
  std::ostringstream traj;
  io::write_trajectories_csv(traj, set.candidates);
  io::write_file(out_dir / "trajectories.csv", traj.str());
  std::ostringstream env;
  io::write_environment_csv(env, set.scenario.environment);
  io::write_file(out_dir / "environment.csv", env.str());
  io::write_file(out_dir / "resolved_config.yaml", to_yaml(config));
  write_manifest(
    out_dir, "generate", {"trajectories.csv", "environment.csv", "resolved_config.yaml"});
  return set;
}

EvaluationReport run_evaluate(
  const RunConfig & config, const std::filesystem::path & out_dir, std::ostream & log)
{
  const auto set = prepare_candidates(config);
  const auto & env = set.scenario.environment;
  const auto & geometry = set.scenario.geometry;
  if (std::any_of(config.weights.w().begin(), config.weights.w().end(), [](double w) {
      return w == 0.0;
    }))
  {
    log << "warning: an agent has zero weight; the balance term is 0 and every candidate "
           "scores 0\n";
  }
  auto report = evaluate_candidates(
    set.candidates, env, config.agents, config.weights, config.reasons, geometry,
    config.analysis.tie_epsilon);

  std::vector<std::string> ids;
  std::vector<std::vector<double>> series;
  for (const auto & t : set.candidates) {
    ids.push_back(t.id());
    series.push_back(
      running_total_score(t, env, config.agents, config.weights, config.reasons, geometry));
  }
  std::vector<double> times;
  for (const auto & s : set.candidates.front().states()) times.push_back(s.t);

  io::write_file(out_dir / "report.json", io::report_to_json(report));
  std::ostringstream scores;
  io::write_scores_csv(scores, report);
  io::write_file(out_dir / "scores.csv", scores.str());
  std::ostringstream timeline;
  io::write_timeline_csv(timeline, times, ids, series);
  io::write_file(out_dir / "timeline.csv", timeline.str());
  io::write_file(out_dir / "resolved_config.yaml", to_yaml(config));
  write_manifest(
    out_dir, "evaluate",
    {"report.json", "scores.csv", "timeline.csv", "resolved_config.yaml"});
  return report;
}

SweepResult run_sweep(const RunConfig & config, const std::filesystem::path & out_dir)
{
  if (config.agents.size() != 3) {
    throw InvalidArgument("sweep: the ternary table needs exactly three agents");
  }
  const auto set = prepare_candidates(config);
  auto sweep = simplex_sweep(
    set.candidates, set.scenario.environment, config.agents, config.reasons,
    set.scenario.geometry, config.analysis.resolution, config.analysis.sweep_tie_threshold,
    config.weights.w_star());
  std::ostringstream csv;
  io::write_sweep_csv(csv, sweep);
  io::write_file(out_dir / "sweep.csv", csv.str());
  io::write_file(out_dir / "regions.json", io::regions_to_json(sweep, decision_regions(sweep)));
  io::write_file(out_dir / "resolved_config.yaml", to_yaml(config));
  write_manifest(out_dir, "sweep", {"sweep.csv", "regions.json", "resolved_config.yaml"});
  return sweep;
}

std::vector<WeightVector> run_invert(
  const RunConfig & config, const std::string & candidate_id,
  const std::filesystem::path & out_dir)
{
  const auto set = prepare_candidates(config);
  const auto sweep = simplex_sweep(
    set.candidates, set.scenario.environment, config.agents, config.reasons,
    set.scenario.geometry, config.analysis.resolution, config.analysis.sweep_tie_threshold,
    config.weights.w_star());
  auto region = inverse_region(sweep, candidate_id);
  std::ostringstream csv;
  io::write_weight_set_csv(csv, region);
  const std::string name = "inverse_" + candidate_id + ".csv";
  io::write_file(out_dir / name, csv.str());
  io::write_file(out_dir / "resolved_config.yaml", to_yaml(config));
  write_manifest(out_dir, "invert", {name, "resolved_config.yaml"});
  return region;
}

std::optional<std::size_t> run_monitor(
  const std::filesystem::path & series_csv, double threshold,
  const std::filesystem::path & out_dir, const std::optional<std::string> & column)
{
  std::istringstream in(io::read_file(series_csv));
  const auto series = io::read_score_series_csv(in, column);
  const auto trigger = monitor_scores(series, threshold);
  io::write_file(
    out_dir / "trigger.txt", (trigger ? std::to_string(*trigger) : std::string("none")) + "\n");
  write_manifest(out_dir, "monitor", {"trigger.txt"});
  return trigger;
}

}  // namespace reason_eval
