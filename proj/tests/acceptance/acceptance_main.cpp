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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "reason_eval/analysis.hpp"
#include "reason_eval/commands.hpp"
#include "reason_eval/config.hpp"
#include "reason_eval/reasons.hpp"
#include "reason_eval/scoring.hpp"

namespace re = reason_eval;
namespace fs = std::filesystem;

namespace
{

using Clock = std::chrono::steady_clock;

struct Check
{
  bool ok{true};
  std::ostringstream why;

  void expect(bool cond, const std::string & what)
  {
    if (!cond) {
      if (ok) why << what;
      ok = false;
    }
  }
};

const std::string kDefaultConfig = std::string(REASON_EVAL_SOURCE_DIR) + "/config/default.yaml";

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

fs::path scratch(const std::string & name)
{
  const auto p = fs::temp_directory_path() / ("reason_eval_acceptance_" + name);
  fs::remove_all(p);
  return p;
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

std::vector<double> random_simplex(std::mt19937_64 & rng, std::size_t n)
{
  std::gamma_distribution<double> g(1.0, 1.0);
  std::vector<double> w(n);
  double s = 0.0;
  for (auto & v : w) s += (v = g(rng));
  for (auto & v : w) v /= s;
  // Renormalise the last entry so the sum is within the accepted tolerance.
  double head = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) head += w[i];
  w.back() = std::max(0.0, 1.0 - head);
  return w;
}

std::vector<re::AgentSpec> paper_agents() { return re::default_run_config().agents; }

// 1 ---------------------------------------------------------------------------
Check balance_exactness()
{
  Check c;
  c.expect(re::balance(re::make_uniform_weights(3)) == 1.0, "B(uniform) != 1");
  const auto grid = re::make_simplex_grid(100);
  std::size_t edges = 0;
  for (const auto & p : grid.points) {
    if (p[0] != 0.0 && p[1] != 0.0 && p[2] != 0.0) continue;
    ++edges;
    const double b = re::balance(re::WeightVector(p));
    c.expect(b == 0.0, "edge cell with B != 0");
  }
  c.expect(edges == 300, "unexpected edge cell count");
  const std::vector<double> w{0.2, 0.6, 0.2};
  const std::vector<double> u{1.0 / 3, 1.0 / 3, 1.0 / 3};
  const double got = re::balance(re::WeightVector(w));
  const double want = oracle::balance(w, u);
  c.expect(std::abs(got - want) <= 1e-9, "B(0.2,0.6,0.2) differs from oracle");
  char buf[160];
  std::snprintf(buf, sizeof buf, "B(0.2,0.6,0.2)=%.6f oracle=%.6f, edges=%zu", got, want, edges);
  if (c.ok) c.why << buf;
  return c;
}

// 2 ---------------------------------------------------------------------------
Check continuity()
{
  Check c;
  const re::ReasonParams p;
  constexpr double eps = 1e-9;
  constexpr double tol = 1e-6;
  double worst = 0.0;
  auto near = [&](double a, double b, const char * what) {
      worst = std::max(worst, std::abs(a - b));
      c.expect(std::abs(a - b) < tol, what);
    };
  near(re::policymaker_step({-eps, 5.0}, p), re::policymaker_step({eps, 5.0}, p), "lane");
  for (double d : {0.0, 5.0, 9.5}) {
    near(
      re::driver_step({1.0, d}, {p.t_driver - eps, 0.0}, 0.1, p).score,
      re::driver_step({1.0, d}, {p.t_driver + eps, 0.0}, 0.1, p).score, "driver time");
  }
  near(
    re::cyclist_safety({0.0, p.d_th - eps}, p), re::cyclist_safety({0.0, p.d_th + eps}, p),
    "safety");
  // Distance gates in the driver and comfort terms switch on accumulated time, so
  // only the time arguments are continuous there.
  near(
    re::cyclist_comfort({0.0, 1.0}, {0.0, p.t_th - eps}, 0.1, p).score,
    re::cyclist_comfort({0.0, 1.0}, {0.0, p.t_th + eps}, 0.1, p).score, "comfort time");
  if (c.ok) c.why << "max jump " << worst;
  return c;
}

// 3 ---------------------------------------------------------------------------
struct RangeRun
{
  std::vector<double> values;
  bool in_range{true};
};

RangeRun range_run()
{
  RangeRun r;
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> d_veh(-5.0, 5.0);
  std::uniform_real_distribution<double> d_vc(0.0, 30.0);
  std::uniform_real_distribution<double> clk(0.0, 40.0);
  const re::ReasonParams p;
  auto record = [&](double v) {
      r.in_range = r.in_range && in_unit(v);
      r.values.push_back(v);
    };
  for (int i = 0; i < 10000; ++i) {
    const re::GeometryInputs g{d_veh(rng), d_vc(rng)};
    const re::FollowClocks k{clk(rng), clk(rng)};
    record(re::policymaker_step(g, p));
    record(re::driver_step(g, k, 0.1, p).score);
    record(re::cyclist_step(g, k, 0.1, p).score);
  }
  const auto agents = paper_agents();
  const re::EvaluationGeometry geometry;
  std::vector<re::ReasonScores> cases;
  for (int i = 0; i < 50; ++i) {
    const auto rc = fixtures::random_case(rng, "R" + std::to_string(i));
    cases.push_back(re::compute_reason_scores(rc.trajectory, rc.environment, agents, p, geometry));
  }
  for (int i = 0; i < 10000; ++i) {
    const re::WeightVector w(random_simplex(rng, 3), random_simplex(rng, 3));
    const auto ev = re::combine_scores(cases[i % cases.size()], agents, w);
    for (const auto & f : ev.reason_scores) for (double v : f) record(v);
    for (double v : ev.agent_scores) record(v);
    record(ev.unbalanced);
    record(ev.balance);
    record(ev.total);
  }
  return r;
}

Check range_and_determinism()
{
  Check c;
  const auto a = range_run();
  const auto b = range_run();
  c.expect(a.in_range, "value outside [0,1]");
  c.expect(a.values.size() == b.values.size(), "run lengths differ");
  bool same = a.values.size() == b.values.size();
  for (std::size_t i = 0; same && i < a.values.size(); ++i) same = same_bits(a.values[i], b.values[i]);
  c.expect(same, "repeated run not bit-identical");
  if (c.ok) c.why << a.values.size() << " values, bit-identical";
  return c;
}

// 4 ---------------------------------------------------------------------------
Check averaging_oracle()
{
  Check c;
  std::mt19937_64 rng(4242);
  re::ReasonParams p;
  p.distance_metric = re::DistanceMetric::reference_point;
  const oracle::Constants k{p.k1, p.k2, p.k3, p.k4, p.d_driver, p.t_driver, p.d_th, p.t_th};
  const re::EvaluationGeometry geometry;
  const re::ReasonKind kinds[] = {re::ReasonKind::policymaker_lane,
    re::ReasonKind::driver_efficiency, re::ReasonKind::cyclist_safety_comfort};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto rc = fixtures::random_case(rng, "R" + std::to_string(i));
    const auto want = oracle::trajectory_scores(rc.steps, rc.trajectory.dt(), k);
    for (int r = 0; r < 3; ++r) {
      const double got =
        re::reason_trajectory_score(rc.trajectory, rc.environment, kinds[r], p, geometry);
      worst = std::max(worst, std::abs(got - want[r]));
    }
  }
  c.expect(worst <= 1e-12, "max deviation " + std::to_string(worst));
  if (c.ok) c.why << "100 trajectories, max deviation " << worst;
  return c;
}

// 5 ---------------------------------------------------------------------------
Check scenario_ranking()
{
  Check c;
  const auto start = Clock::now();
  const auto cfg = re::load_config(kDefaultConfig);
  std::ostringstream log;
  const auto report = re::run_evaluate(cfg, scratch("evaluate"), log);
  const double elapsed = seconds_since(start);
  const auto & order = report.ranking.order;
  c.expect(order.size() == 4, "expected four candidates");
  c.expect(order.size() == 4 && order[0] == "T1", "ranking[0] != T1");
  c.expect(order.size() == 4 && order[3] == "T4", "ranking[3] != T4");
  c.expect(elapsed < 10.0, "evaluate took too long");
  if (c.ok) {
    c.why << "order";
    for (const auto & id : order) c.why << ' ' << id;
    c.why << ", " << elapsed << " s";
  }
  return c;
}

// 6 ---------------------------------------------------------------------------
Check sweep_structure()
{
  Check c;
  const auto start = Clock::now();
  auto cfg = re::load_config(kDefaultConfig);
  cfg.analysis.resolution = 100;
  const auto sweep = re::run_sweep(cfg, scratch("sweep"));
  const double elapsed = seconds_since(start);
  c.expect(sweep.cells.size() == 5151, "cell count != 5151");
  for (const auto & cell : sweep.cells) {
    if (cell.is_interior()) continue;
    bool zeros = true;
    for (double s : cell.scores) zeros = zeros && s == 0.0;
    c.expect(cell.is_tie() && zeros, "edge cell not an all-zero tie");
  }
  const std::string pm = re::nearest_interior_cell(sweep, std::vector<double>{1, 0, 0}).best;
  const std::string dr = re::nearest_interior_cell(sweep, std::vector<double>{0, 1, 0}).best;
  const std::string cy = re::nearest_interior_cell(sweep, std::vector<double>{0, 0, 1}).best;
  c.expect(dr == "T1", "driver vertex selects " + dr);
  c.expect(cy == "T3", "cyclist vertex selects " + cy);
  c.expect(pm == "T4", "policymaker vertex selects " + pm);
  c.expect(elapsed < 30.0, "sweep took too long");
  if (c.ok) {
    c.why << sweep.cells.size() << " cells, vertices pm=" << pm << " driver=" << dr
          << " cyclist=" << cy << ", " << elapsed << " s";
  }
  return c;
}

// 7 ---------------------------------------------------------------------------
Check monitor()
{
  Check c;
  const auto hit = re::monitor_scores(std::vector<double>{0.9, 0.8, 0.65, 0.4}, 0.7);
  const auto none = re::monitor_scores(std::vector<double>{0.9, 0.8, 0.95, 0.71}, 0.7);
  c.expect(hit.has_value() && *hit == 2, "trigger index != 2");
  c.expect(!none.has_value(), "all-high series triggered");
  if (c.ok) c.why << "index 2, all-high none";
  return c;
}

// 8 ---------------------------------------------------------------------------
Check argmax_invariance()
{
  Check c;
  const auto cfg = re::load_config(kDefaultConfig);
  const auto set = re::prepare_candidates(cfg);
  std::vector<re::ReasonScores> scores;
  for (const auto & t : set.candidates) {
    scores.push_back(re::compute_reason_scores(
      t, set.scenario.environment, cfg.agents, cfg.reasons, set.scenario.geometry));
  }
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const re::WeightVector w(random_simplex(rng, 3));
    std::vector<re::ScoredCandidate> by_s;
    std::vector<re::ScoredCandidate> by_sw;
    double b = 0.0;
    for (const auto & s : scores) {
      const auto ev = re::combine_scores(s, cfg.agents, w);
      by_s.push_back({ev.id, ev.total});
      by_sw.push_back({ev.id, ev.unbalanced});
      b = ev.balance;
    }
    if (b <= 0.0) continue;
    ++checked;
    c.expect(
      re::rank_candidates(by_s, 0.0).order == re::rank_candidates(by_sw, 0.0).order,
      "ranking differs for some weight vector");
  }
  if (c.ok) c.why << checked << " weight vectors";
  return c;
}

}  // namespace

int main()
{
  const std::pair<const char *, std::function<Check()>> criteria[] = {
    {"1 balance exactness", balance_exactness},
    {"2 continuity", continuity},
    {"3 range and determinism", range_and_determinism},
    {"4 averaging oracle", averaging_oracle},
    {"5 scenario ranking", scenario_ranking},
    {"6 sweep structure", sweep_structure},
    {"7 monitor", monitor},
    {"8 argmax invariance", argmax_invariance},
  };
  int failures = 0;
  for (const auto & [name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception & e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    std::printf("%s criterion %s: %s\n", c.ok ? "PASS" : "FAIL", name, c.why.str().c_str());
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
