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

#include "reason_eval/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "reason_eval/errors.hpp"

namespace reason_eval::io
{
namespace
{

using nlohmann::json;

std::vector<std::string> split(const std::string & line)
{
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    out.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

/// Data lines of a CSV, header first. Skips blank lines and strips CR.
std::vector<std::pair<std::size_t, std::vector<std::string>>> read_rows(std::istream & in)
{
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.emplace_back(number, split(line));
  }
  if (rows.empty()) {
    throw ParseError("csv: empty input");
  }
  return rows;
}

double parse_double(const std::string & text, std::size_t line)
{
  double value = 0.0;
  const char * begin = text.data();
  const char * end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("csv line " + std::to_string(line) + ": invalid number '" + text + "'");
  }
  return value;
}

void expect_header(
  const std::vector<std::string> & header, const std::vector<std::string> & expected)
{
  if (header != expected) {
    std::string want;
    for (const auto & h : expected) want += (want.empty() ? "" : ",") + h;
    throw ParseError("csv: expected header '" + want + "'");
  }
}

template <typename State>
std::vector<std::pair<std::string, std::vector<State>>> group_by_id(
  const std::vector<std::pair<std::string, State>> & rows)
{
  std::vector<std::pair<std::string, std::vector<State>>> groups;
  std::map<std::string, std::size_t> index;
  for (const auto & [id, state] : rows) {
    auto [it, inserted] = index.try_emplace(id, groups.size());
    if (inserted) groups.emplace_back(id, std::vector<State>{});
    groups[it->second].second.push_back(state);
  }
  return groups;
}

}  // namespace

std::string format_full(double value)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_fixed6(double value)
{
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

void write_trajectories_csv(std::ostream & out, std::span<const Trajectory> trajectories)
{
  out << "id,t,x,y,heading,speed\n";
  for (const auto & traj : trajectories) {
    for (const auto & s : traj.states()) {
      out << traj.id() << ',' << format_full(s.t) << ',' << format_full(s.x) << ','
          << format_full(s.y) << ',' << format_full(s.heading) << ',' << format_full(s.speed)
          << '\n';
    }
  }
}

std::vector<Trajectory> read_trajectories_csv(std::istream & in)
{
  const auto rows = read_rows(in);
  expect_header(rows.front().second, {"id", "t", "x", "y", "heading", "speed"});
  std::vector<std::pair<std::string, EgoState>> states;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto & [line, f] = rows[r];
    if (f.size() != 6) {
      throw ParseError("csv line " + std::to_string(line) + ": expected 6 fields");
    }
    states.emplace_back(
      f[0], EgoState{parse_double(f[1], line), parse_double(f[2], line), parse_double(f[3], line),
        parse_double(f[4], line), parse_double(f[5], line)});
  }
  std::vector<Trajectory> out;
  for (auto & [id, s] : group_by_id(states)) {
    if (s.size() < 2) {
      throw ParseError("trajectory '" + id + "': needs at least 2 states");
    }
    const double dt = s[1].t - s[0].t;
    out.emplace_back(id, dt, std::move(s));
  }
  return out;
}

void write_environment_csv(std::ostream & out, const Environment & environment)
{
  out << "id,t,x,y,heading,speed,kind\n";
  for (const auto & agent : environment.agents()) {
    for (const auto & s : agent.states()) {
      out << agent.id() << ',' << format_full(s.t) << ',' << format_full(s.x) << ','
          << format_full(s.y) << ',' << format_full(s.heading) << ',' << format_full(s.speed)
          << ',' << to_string(s.kind) << '\n';
    }
  }
}

Environment read_environment_csv(std::istream & in)
{
  const auto rows = read_rows(in);
  expect_header(rows.front().second, {"id", "t", "x", "y", "heading", "speed", "kind"});
  std::vector<std::pair<std::string, EnvAgentState>> states;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto & [line, f] = rows[r];
    if (f.size() != 7) {
      throw ParseError("csv line " + std::to_string(line) + ": expected 7 fields");
    }
    EnvAgentState s;
    s.t = parse_double(f[1], line);
    s.x = parse_double(f[2], line);
    s.y = parse_double(f[3], line);
    s.heading = parse_double(f[4], line);
    s.speed = parse_double(f[5], line);
    try {
      s.kind = agent_kind_from_string(f[6]);
    } catch (const InvalidArgument & e) {
      throw ParseError("csv line " + std::to_string(line) + ": " + e.what());
    }
    states.emplace_back(f[0], s);
  }
  std::vector<AgentTrack> agents;
  for (auto & [id, s] : group_by_id(states)) {
    agents.emplace_back(id, std::move(s));
  }
  return Environment(std::move(agents));
}

std::string report_to_json(const EvaluationReport & report)
{
  json j;
  j["weights"] = report.weights.w();
  j["ideal_weights"] = report.weights.w_star();
  j["agents"] = json::array();
  for (std::size_t i = 0; i < report.agent_ids.size(); ++i) {
    j["agents"].push_back({{"id", report.agent_ids[i]}, {"reasons", report.reason_ids[i]}});
  }
  j["candidates"] = json::array();
  for (const auto & c : report.candidates) {
    json agents = json::array();
    for (std::size_t i = 0; i < c.agent_scores.size(); ++i) {
      json reasons = json::object();
      for (std::size_t b = 0; b < c.reason_scores[i].size(); ++b) {
        reasons[report.reason_ids[i][b]] = c.reason_scores[i][b];
      }
      agents.push_back(
        {{"id", report.agent_ids[i]}, {"S_i", c.agent_scores[i]}, {"F", reasons}});
    }
    j["candidates"].push_back(
      {{"id", c.id}, {"agents", agents}, {"S_w", c.unbalanced}, {"B", c.balance},
        {"S", c.total}});
  }
  j["ranking"] = report.ranking.order;
  j["ties"] = report.ranking.ties;
  j["tie_epsilon"] = report.tie_epsilon;
  return j.dump(2) + "\n";
}

void write_scores_csv(std::ostream & out, const EvaluationReport & report)
{
  out << "candidate,agent,reason,F,S_agent,weight,S_w,B,S,rank\n";
  for (const auto & c : report.candidates) {
    const auto pos = std::find(report.ranking.order.begin(), report.ranking.order.end(), c.id);
    const auto rank = static_cast<std::size_t>(pos - report.ranking.order.begin()) + 1;
    for (std::size_t i = 0; i < c.agent_scores.size(); ++i) {
      for (std::size_t b = 0; b < c.reason_scores[i].size(); ++b) {
        out << c.id << ',' << report.agent_ids[i] << ',' << report.reason_ids[i][b] << ','
            << format_fixed6(c.reason_scores[i][b]) << ',' << format_fixed6(c.agent_scores[i])
            << ',' << format_fixed6(report.weights[i]) << ',' << format_fixed6(c.unbalanced)
            << ',' << format_fixed6(c.balance) << ',' << format_fixed6(c.total) << ',' << rank
            << '\n';
      }
    }
  }
}

void write_timeline_csv(
  std::ostream & out, std::span<const double> times, std::span<const std::string> ids,
  std::span<const std::vector<double>> series)
{
  if (ids.size() != series.size()) {
    throw InvalidArgument("timeline: id and series counts differ");
  }
  out << 't';
  for (const auto & id : ids) out << ",S_" << id;
  out << '\n';
  for (std::size_t l = 0; l < times.size(); ++l) {
    out << format_fixed6(times[l]);
    for (const auto & s : series) {
      if (s.size() != times.size()) {
        throw InvalidArgument("timeline: series length differs from the time grid");
      }
      out << ',' << format_fixed6(s[l]);
    }
    out << '\n';
  }
}

void write_sweep_csv(std::ostream & out, const SweepResult & sweep)
{
  if (sweep.cells.empty()) {
    throw InvalidArgument("sweep csv: no cells");
  }
  const std::size_t n = sweep.cells.front().weights.size();
  for (std::size_t i = 0; i < n; ++i) out << 'w' << (i + 1) << ',';
  out << 'B';
  for (const auto & id : sweep.candidate_ids) out << ",S_" << id;
  out << ",best\n";
  for (const auto & cell : sweep.cells) {
    for (std::size_t i = 0; i < n; ++i) out << format_fixed6(cell.weights[i]) << ',';
    out << format_fixed6(cell.balance);
    for (double s : cell.scores) out << ',' << format_fixed6(s);
    out << ',' << cell.best << '\n';
  }
}

std::string regions_to_json(const SweepResult & sweep, const DecisionRegions & regions)
{
  json counts = json::object();
  for (const auto & id : sweep.candidate_ids) {
    counts[id] = regions.count(id);
  }
  counts[kTieLabel] = regions.ties.size();
  json j;
  j["cells"] = sweep.cells.size();
  j["tie_threshold"] = sweep.tie_threshold;
  j["counts"] = counts;
  return j.dump(2) + "\n";
}

void write_weight_set_csv(std::ostream & out, std::span<const WeightVector> weights)
{
  const std::size_t n = weights.empty() ? 3 : weights.front().size();
  for (std::size_t i = 0; i < n; ++i) out << (i ? ",w" : "w") << (i + 1);
  out << '\n';
  for (const auto & w : weights) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << format_fixed6(w[i]);
    out << '\n';
  }
}

std::vector<double> read_score_series_csv(
  std::istream & in, const std::optional<std::string> & column)
{
  const auto rows = read_rows(in);
  const auto & header = rows.front().second;
  std::optional<std::size_t> col;
  auto find = [&](const std::string & name) -> std::optional<std::size_t> {
      const auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) return std::nullopt;
      return static_cast<std::size_t>(it - header.begin());
    };
  if (column) {
    col = find(*column);
    if (!col) throw ParseError("score series: no column '" + *column + "'");
  } else if (auto score = find("score")) {
    col = score;
  } else {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (header[k] != "t" && header[k] != "index") candidates.push_back(k);
    }
    if (candidates.size() != 1) {
      throw ParseError("score series: ambiguous columns, pass a column name");
    }
    col = candidates.front();
  }
  std::vector<double> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto & [line, f] = rows[r];
    if (f.size() != header.size()) {
      throw ParseError("csv line " + std::to_string(line) + ": field count differs from header");
    }
    out.push_back(parse_double(f[*col], line));
  }
  return out;
}

std::string read_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path & path, const std::string & content)
{
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create '" + path.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write '" + path.string() + "'");
  }
  out << content;
  if (!out) {
    throw IoError("write failed for '" + path.string() + "'");
  }
}

}  // namespace reason_eval::io
