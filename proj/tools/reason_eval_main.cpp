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

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reason_eval/commands.hpp"
#include "reason_eval/config.hpp"
#include "reason_eval/errors.hpp"

namespace
{

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct CommonOptions
{
  std::string config;
  std::string out;
  std::string trajectories;
  std::string environment;
};

void add_common(CLI::App * cmd, CommonOptions & opts)
{
  cmd->add_option("--config", opts.config, "YAML run configuration (defaults if omitted)");
  cmd->add_option("--out", opts.out, "Output directory (overrides output.dir)");
  cmd->add_option("--trajectories", opts.trajectories, "Candidate CSV merged into the set by id");
  cmd->add_option("--environment", opts.environment, "Environment CSV replacing the cyclist");
}

reason_eval::RunConfig resolve_config(const CommonOptions & opts)
{
  auto cfg = opts.config.empty() ? reason_eval::default_run_config() :
    reason_eval::load_config(opts.config);
  if (!opts.out.empty()) cfg.output_dir = opts.out;
  if (!opts.trajectories.empty()) cfg.inputs.trajectories = opts.trajectories;
  if (!opts.environment.empty()) cfg.inputs.environment = opts.environment;
  return cfg;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Reason-based evaluation of candidate vehicle trajectories"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::optional<unsigned> resolution;
  std::string candidate;
  std::optional<double> threshold;
  std::string series;
  std::optional<std::string> column;

  auto * generate = app.add_subcommand("generate", "Write the scenario's candidates and environment");
  add_common(generate, opts);

  auto * evaluate = app.add_subcommand("evaluate", "Score and rank the candidates");
  add_common(evaluate, opts);

  auto * sweep = app.add_subcommand("sweep", "Sweep agent weights over the simplex");
  add_common(sweep, opts);
  sweep->add_option("--resolution", resolution, "Subdivisions per simplex edge");

  auto * invert = app.add_subcommand("invert", "Weight vectors under which a candidate wins");
  add_common(invert, opts);
  invert->add_option("--candidate", candidate, "Candidate id")->required();
  invert->add_option("--resolution", resolution, "Subdivisions per simplex edge");

  auto * monitor = app.add_subcommand("monitor", "First index where a score series drops below threshold");
  add_common(monitor, opts);
  monitor->add_option("--series", series, "Score-series CSV (overrides inputs.score_series)");
  monitor->add_option("--column", column, "Column holding the scores");
  monitor->add_option("--threshold", threshold, "Trigger threshold in (0, 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    auto cfg = resolve_config(opts);
    if (resolution) cfg.analysis.resolution = *resolution;
    if (threshold) cfg.analysis.monitor_threshold = *threshold;
    const auto & out = cfg.output_dir;

    if (generate->parsed()) {
      const auto set = reason_eval::run_generate(cfg, out);
      std::cout << "wrote " << set.candidates.size() << " candidates to " << out.string() << "\n";
    } else if (evaluate->parsed()) {
      const auto report = reason_eval::run_evaluate(cfg, out, std::cerr);
      for (std::size_t k = 0; k < report.ranking.order.size(); ++k) {
        const auto & id = report.ranking.order[k];
        for (const auto & c : report.candidates) {
          if (c.id == id) {
            std::cout << (k + 1) << ". " << id << "  S=" << c.total << "  S_w=" << c.unbalanced
                      << "  B=" << c.balance << "\n";
          }
        }
      }
      for (const auto & group : report.ranking.ties) {
        std::cout << "tie:";
        for (const auto & id : group) std::cout << ' ' << id;
        std::cout << "\n";
      }
    } else if (sweep->parsed()) {
      const auto result = reason_eval::run_sweep(cfg, out);
      const auto regions = reason_eval::decision_regions(result);
      std::cout << result.cells.size() << " cells";
      for (const auto & id : result.candidate_ids) {
        std::cout << "  " << id << "=" << regions.count(id);
      }
      std::cout << "  tie=" << regions.ties.size() << "\n";
    } else if (invert->parsed()) {
      const auto region = reason_eval::run_invert(cfg, candidate, out);
      std::cout << candidate << " wins in " << region.size() << " cells\n";
    } else if (monitor->parsed()) {
      std::filesystem::path path = series;
      if (path.empty()) {
        if (!cfg.inputs.score_series) {
          throw reason_eval::InvalidArgument("monitor: no score series (use --series)");
        }
        path = *cfg.inputs.score_series;
      }
      const auto trigger =
        reason_eval::run_monitor(path, cfg.analysis.monitor_threshold, out, column);
      std::cout << (trigger ? std::to_string(*trigger) : std::string("none")) << "\n";
    }
  } catch (const reason_eval::IoError & e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const reason_eval::Error & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
