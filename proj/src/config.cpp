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

#include "reason_eval/config.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>
#include <utility>

#include <yaml-cpp/yaml.h>

#include "reason_eval/errors.hpp"
#include "reason_eval/io.hpp"

namespace reason_eval
{
namespace
{

std::string join(const std::string & path, const std::string & key)
{
  return path.empty() ? key : path + "." + key;
}

void check_map(const YAML::Node & node, const std::string & path)
{
  if (!node.IsMap()) {
    throw ConfigError("config: '" + path + "' must be a mapping");
  }
}

void check_keys(
  const YAML::Node & node, const std::string & path, std::initializer_list<std::string_view> allowed)
{
  check_map(node, path.empty() ? "<root>" : path);
  for (const auto & kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("config: unknown key '" + join(path, key) + "'");
    }
  }
}

template <typename T>
void read(const YAML::Node & node, const char * key, const std::string & path, T & target)
{
  const auto child = node[key];
  if (!child) return;
  try {
    target = child.as<T>();
  } catch (const YAML::Exception &) {
    throw ConfigError("config: '" + join(path, key) + "' has the wrong type");
  }
}

void read_kmh(const YAML::Node & node, const char * key, const std::string & path, double & mps)
{
  const auto child = node[key];
  if (!child) return;
  double kmh = 0.0;
  read(node, key, path, kmh);
  mps = kmh_to_mps(kmh);
}

std::vector<double> read_vector(const YAML::Node & node, const std::string & path)
{
  if (!node.IsSequence()) {
    throw ConfigError("config: '" + path + "' must be a list of numbers");
  }
  try {
    return node.as<std::vector<double>>();
  } catch (const YAML::Exception &) {
    throw ConfigError("config: '" + path + "' must be a list of numbers");
  }
}

template <typename F>
auto with_field(const std::string & field, F && f)
{
  try {
    return f();
  } catch (const InvalidArgument & e) {
    throw ConfigError("config: '" + field + "': " + e.what());
  }
}

void parse_scenario(const YAML::Node & node, ScenarioConfig & sc)
{
  check_keys(
    node, "scenario",
    {"horizon", "dt", "road", "ego", "cyclist", "follow", "lateral_time_constant", "candidates"});
  read(node, "horizon", "scenario", sc.horizon);
  read(node, "dt", "scenario", sc.dt);
  read(node, "lateral_time_constant", "scenario", sc.lateral_time_constant);
  if (const auto road = node["road"]) {
    const std::string p = "scenario.road";
    check_keys(road, p, {"total_width", "lane_width", "centerline_y", "speed_limit_kmh", "length"});
    read(road, "total_width", p, sc.road.total_width);
    read(road, "lane_width", p, sc.road.lane_width);
    read(road, "centerline_y", p, sc.road.centerline_y);
    read_kmh(road, "speed_limit_kmh", p, sc.road.speed_limit);
    read(road, "length", p, sc.road.length);
  }
  if (const auto ego = node["ego"]) {
    const std::string p = "scenario.ego";
    check_keys(ego, p, {"length", "width", "initial_speed_kmh", "initial_gap", "max_accel"});
    read(ego, "length", p, sc.ego.length);
    read(ego, "width", p, sc.ego.width);
    read_kmh(ego, "initial_speed_kmh", p, sc.ego_initial_speed);
    read(ego, "initial_gap", p, sc.initial_gap);
    read(ego, "max_accel", p, sc.max_accel);
  }
  if (const auto cyc = node["cyclist"]) {
    const std::string p = "scenario.cyclist";
    check_keys(cyc, p, {"speed_kmh", "lateral_position"});
    read_kmh(cyc, "speed_kmh", p, sc.cyclist_speed);
    read(cyc, "lateral_position", p, sc.cyclist_y);
  }
  if (const auto follow = node["follow"]) {
    const std::string p = "scenario.follow";
    check_keys(follow, p, {"gap", "decel"});
    read(follow, "gap", p, sc.follow_gap);
    read(follow, "decel", p, sc.follow_decel);
  }
  if (const auto cands = node["candidates"]) {
    if (!cands.IsSequence()) {
      throw ConfigError("config: 'scenario.candidates' must be a list");
    }
    sc.candidates.clear();
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const auto c = cands[k];
      const std::string p = "scenario.candidates[" + std::to_string(k) + "]";
      check_keys(
        c, p, {"id", "style", "lateral_clearance", "overtake_speed_kmh", "encroachment_duration"});
      CandidateParams cp;
      cp.overtake_speed = sc.road.speed_limit;
      std::string style;
      read(c, "id", p, cp.id);
      read(c, "style", p, style);
      if (cp.id.empty() || style.empty()) {
        throw ConfigError("config: '" + p + "' needs 'id' and 'style'");
      }
      cp.style = with_field(p + ".style", [&] { return candidate_style_from_string(style); });
      read(c, "lateral_clearance", p, cp.lateral_clearance);
      read_kmh(c, "overtake_speed_kmh", p, cp.overtake_speed);
      read(c, "encroachment_duration", p, cp.encroachment_duration);
      sc.candidates.push_back(std::move(cp));
    }
  }
}

std::vector<AgentSpec> parse_agents(const YAML::Node & node)
{
  if (!node.IsSequence() || node.size() == 0) {
    throw ConfigError("config: 'agents' must be a nonempty list");
  }
  std::vector<AgentSpec> agents;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto a = node[i];
    const std::string p = "agents[" + std::to_string(i) + "]";
    check_keys(a, p, {"id", "reasons"});
    std::string id;
    read(a, "id", p, id);
    if (id.empty() || !a["reasons"] || !a["reasons"].IsSequence()) {
      throw ConfigError("config: '" + p + "' needs 'id' and a 'reasons' list");
    }
    std::vector<ReasonSpec> reasons;
    for (std::size_t b = 0; b < a["reasons"].size(); ++b) {
      const auto r = a["reasons"][b];
      const std::string rp = p + ".reasons[" + std::to_string(b) + "]";
      check_keys(r, rp, {"id", "kind", "alpha"});
      std::string rid;
      std::string kind;
      double alpha = 1.0;
      read(r, "id", rp, rid);
      read(r, "kind", rp, kind);
      read(r, "alpha", rp, alpha);
      if (kind.empty()) {
        throw ConfigError("config: '" + rp + "' needs 'kind'");
      }
      if (rid.empty()) rid = kind;
      reasons.push_back(with_field(rp, [&] {
        return ReasonSpec(rid, reason_kind_from_string(kind), alpha);
      }));
    }
    agents.push_back(with_field(p, [&] { return AgentSpec(id, std::move(reasons)); }));
  }
  return agents;
}

std::filesystem::path resolve(const std::filesystem::path & base, const std::string & p)
{
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

RunConfig default_run_config()
{
  RunConfig cfg;
  cfg.agents = {
    AgentSpec("policymaker", {ReasonSpec("lane_compliance", ReasonKind::policymaker_lane, 1.0)}),
    AgentSpec("driver", {ReasonSpec("time_efficiency", ReasonKind::driver_efficiency, 1.0)}),
    AgentSpec(
      "cyclist", {ReasonSpec("safety_comfort", ReasonKind::cyclist_safety_comfort, 1.0)}),
  };
  cfg.weights = make_uniform_weights(cfg.agents.size());
  return cfg;
}

RunConfig parse_config(const std::string & yaml_text, const std::filesystem::path & base_dir)
{
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception & e) {
    throw ParseError(std::string("config: YAML parse error: ") + e.what());
  }
  if (!root || root.IsNull()) {
    throw ParseError("config: empty document");
  }
  check_keys(
    root, "",
    {"scenario", "reasons", "agents", "weights", "ideal_weights", "analysis", "inputs", "output"});

  RunConfig cfg = default_run_config();
  if (const auto sc = root["scenario"]) {
    parse_scenario(sc, cfg.scenario);
  }
  with_field("scenario", [&] { cfg.scenario.validate(); return 0; });

  if (const auto r = root["reasons"]) {
    const std::string p = "reasons";
    check_keys(
      r, p, {"k1", "k2", "k3", "k4", "d_driver", "t_driver", "d_th", "t_th", "distance_metric"});
    read(r, "k1", p, cfg.reasons.k1);
    read(r, "k2", p, cfg.reasons.k2);
    read(r, "k3", p, cfg.reasons.k3);
    read(r, "k4", p, cfg.reasons.k4);
    read(r, "d_driver", p, cfg.reasons.d_driver);
    read(r, "t_driver", p, cfg.reasons.t_driver);
    read(r, "d_th", p, cfg.reasons.d_th);
    read(r, "t_th", p, cfg.reasons.t_th);
    std::string metric;
    read(r, "distance_metric", p, metric);
    if (!metric.empty()) {
      cfg.reasons.distance_metric =
        with_field("reasons.distance_metric", [&] { return distance_metric_from_string(metric); });
    }
  }
  with_field("reasons", [&] { cfg.reasons.validate(); return 0; });

  if (const auto a = root["agents"]) {
    cfg.agents = parse_agents(a);
  }
  const std::size_t n = cfg.agents.size();
  std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
  std::vector<double> w = uniform;
  std::vector<double> w_star = uniform;
  if (const auto node = root["weights"]) w = read_vector(node, "weights");
  if (const auto node = root["ideal_weights"]) w_star = read_vector(node, "ideal_weights");
  if (w.size() != n) {
    throw ConfigError("config: 'weights' must have one entry per agent");
  }
  if (w_star.size() != n) {
    throw ConfigError("config: 'ideal_weights' must have one entry per agent");
  }
  cfg.weights = with_field("weights", [&] { return WeightVector(w, w_star); });

  if (const auto an = root["analysis"]) {
    const std::string p = "analysis";
    check_keys(an, p, {"resolution", "sweep_tie_threshold", "tie_epsilon", "monitor_threshold"});
    read(an, "resolution", p, cfg.analysis.resolution);
    read(an, "sweep_tie_threshold", p, cfg.analysis.sweep_tie_threshold);
    read(an, "tie_epsilon", p, cfg.analysis.tie_epsilon);
    read(an, "monitor_threshold", p, cfg.analysis.monitor_threshold);
  }
  if (cfg.analysis.resolution < 1) {
    throw ConfigError("config: 'analysis.resolution' must be at least 1");
  }
  if (!(cfg.analysis.sweep_tie_threshold >= 0.0) || !(cfg.analysis.tie_epsilon >= 0.0)) {
    throw ConfigError("config: tie thresholds must be non-negative");
  }
  if (!(cfg.analysis.monitor_threshold > 0.0 && cfg.analysis.monitor_threshold < 1.0)) {
    throw ConfigError("config: 'analysis.monitor_threshold' must lie in (0, 1)");
  }

  if (const auto in = root["inputs"]) {
    check_keys(in, "inputs", {"trajectories", "environment", "score_series"});
    auto path_field = [&](const char * key, std::optional<std::filesystem::path> & target) {
        std::string s;
        read(in, key, "inputs", s);
        if (!s.empty()) target = resolve(base_dir, s);
      };
    path_field("trajectories", cfg.inputs.trajectories);
    path_field("environment", cfg.inputs.environment);
    path_field("score_series", cfg.inputs.score_series);
  }
  if (const auto out = root["output"]) {
    check_keys(out, "output", {"dir"});
    std::string dir;
    read(out, "dir", "output", dir);
    if (!dir.empty()) cfg.output_dir = resolve(base_dir, dir);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path & path)
{
  const auto text = io::read_file(path);
  return parse_config(text, path.parent_path());
}

std::string to_yaml(const RunConfig & cfg)
{
  const auto & sc = cfg.scenario;
  auto kmh = [](double mps) { return mps * 3.6; };
  YAML::Emitter e;
  e.SetDoublePrecision(17);
  e << YAML::BeginMap;
  e << YAML::Key << "scenario" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "horizon" << YAML::Value << sc.horizon;
  e << YAML::Key << "dt" << YAML::Value << sc.dt;
  e << YAML::Key << "road" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "total_width" << YAML::Value << sc.road.total_width;
  e << YAML::Key << "lane_width" << YAML::Value << sc.road.lane_width;
  e << YAML::Key << "centerline_y" << YAML::Value << sc.road.centerline_y;
  e << YAML::Key << "speed_limit_kmh" << YAML::Value << kmh(sc.road.speed_limit);
  e << YAML::Key << "length" << YAML::Value << sc.road.length;
  e << YAML::EndMap;
  e << YAML::Key << "ego" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "length" << YAML::Value << sc.ego.length;
  e << YAML::Key << "width" << YAML::Value << sc.ego.width;
  e << YAML::Key << "initial_speed_kmh" << YAML::Value << kmh(sc.ego_initial_speed);
  e << YAML::Key << "initial_gap" << YAML::Value << sc.initial_gap;
  e << YAML::Key << "max_accel" << YAML::Value << sc.max_accel;
  e << YAML::EndMap;
  e << YAML::Key << "cyclist" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "speed_kmh" << YAML::Value << kmh(sc.cyclist_speed);
  e << YAML::Key << "lateral_position" << YAML::Value << sc.cyclist_y;
  e << YAML::EndMap;
  e << YAML::Key << "follow" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "gap" << YAML::Value << sc.follow_gap;
  e << YAML::Key << "decel" << YAML::Value << sc.follow_decel;
  e << YAML::EndMap;
  e << YAML::Key << "lateral_time_constant" << YAML::Value << sc.lateral_time_constant;
  e << YAML::Key << "candidates" << YAML::Value << YAML::BeginSeq;
  for (const auto & c : sc.candidates) {
    e << YAML::Flow << YAML::BeginMap;
    e << YAML::Key << "id" << YAML::Value << c.id;
    e << YAML::Key << "style" << YAML::Value << std::string(to_string(c.style));
    e << YAML::Key << "lateral_clearance" << YAML::Value << c.lateral_clearance;
    e << YAML::Key << "overtake_speed_kmh" << YAML::Value << kmh(c.overtake_speed);
    e << YAML::Key << "encroachment_duration" << YAML::Value << c.encroachment_duration;
    e << YAML::EndMap;
  }
  e << YAML::EndSeq;
  e << YAML::EndMap;

  const auto & r = cfg.reasons;
  e << YAML::Key << "reasons" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "k1" << YAML::Value << r.k1;
  e << YAML::Key << "k2" << YAML::Value << r.k2;
  e << YAML::Key << "k3" << YAML::Value << r.k3;
  e << YAML::Key << "k4" << YAML::Value << r.k4;
  e << YAML::Key << "d_driver" << YAML::Value << r.d_driver;
  e << YAML::Key << "t_driver" << YAML::Value << r.t_driver;
  e << YAML::Key << "d_th" << YAML::Value << r.d_th;
  e << YAML::Key << "t_th" << YAML::Value << r.t_th;
  e << YAML::Key << "distance_metric" << YAML::Value << std::string(to_string(r.distance_metric));
  e << YAML::EndMap;

  e << YAML::Key << "agents" << YAML::Value << YAML::BeginSeq;
  for (const auto & a : cfg.agents) {
    e << YAML::BeginMap << YAML::Key << "id" << YAML::Value << a.id();
    e << YAML::Key << "reasons" << YAML::Value << YAML::BeginSeq;
    for (const auto & reason : a.reasons()) {
      e << YAML::Flow << YAML::BeginMap;
      e << YAML::Key << "id" << YAML::Value << reason.id;
      e << YAML::Key << "kind" << YAML::Value << std::string(to_string(reason.kind));
      e << YAML::Key << "alpha" << YAML::Value << reason.alpha;
      e << YAML::EndMap;
    }
    e << YAML::EndSeq << YAML::EndMap;
  }
  e << YAML::EndSeq;
  e << YAML::Key << "weights" << YAML::Value << YAML::Flow << cfg.weights.w();
  e << YAML::Key << "ideal_weights" << YAML::Value << YAML::Flow << cfg.weights.w_star();

  e << YAML::Key << "analysis" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "resolution" << YAML::Value << cfg.analysis.resolution;
  e << YAML::Key << "sweep_tie_threshold" << YAML::Value << cfg.analysis.sweep_tie_threshold;
  e << YAML::Key << "tie_epsilon" << YAML::Value << cfg.analysis.tie_epsilon;
  e << YAML::Key << "monitor_threshold" << YAML::Value << cfg.analysis.monitor_threshold;
  e << YAML::EndMap;

  e << YAML::Key << "inputs" << YAML::Value << YAML::BeginMap;
  if (cfg.inputs.trajectories) {
    e << YAML::Key << "trajectories" << YAML::Value << cfg.inputs.trajectories->string();
  }
  if (cfg.inputs.environment) {
    e << YAML::Key << "environment" << YAML::Value << cfg.inputs.environment->string();
  }
  if (cfg.inputs.score_series) {
    e << YAML::Key << "score_series" << YAML::Value << cfg.inputs.score_series->string();
  }
  e << YAML::EndMap;
  e << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "dir" << YAML::Value << cfg.output_dir.string();
  e << YAML::EndMap;
  e << YAML::EndMap;
  return std::string(e.c_str()) + "\n";
}

}  // namespace reason_eval
