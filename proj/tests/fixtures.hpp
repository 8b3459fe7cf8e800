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

#ifndef REASON_EVAL_TESTS__FIXTURES_HPP_
#define REASON_EVAL_TESTS__FIXTURES_HPP_

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "reason_eval/core_model.hpp"

namespace fixtures
{

struct RandomCase
{
  reason_eval::Trajectory trajectory;
  reason_eval::Environment environment;
  std::vector<oracle::Step> steps;  // geometry recomputed by hand, reference-point metric
};

/// Random ego trajectory with one cyclist. Positions are drawn near the cyclist so
/// every reason branch gets exercised.
inline RandomCase random_case(std::mt19937_64 & rng, const std::string & id)
{
  std::uniform_int_distribution<int> len(2, 300);
  std::uniform_real_distribution<double> x(-15.0, 15.0);
  std::uniform_real_distribution<double> y(-3.5, 3.0);
  std::uniform_real_distribution<double> heading(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> speed(0.0, 12.0);
  const double dt = 0.1;
  const int n = len(rng);
  std::vector<reason_eval::EgoState> ego;
  std::vector<reason_eval::EnvAgentState> cyc;
  std::vector<oracle::Step> steps;
  for (int l = 0; l < n; ++l) {
    const double t = l * dt;
    const reason_eval::EgoState s{t, x(rng), y(rng), heading(rng), speed(rng)};
    const double cx = x(rng) * 0.5;
    const double cy = -2.0 + 0.3 * y(rng) / 3.5;
    ego.push_back(s);
    cyc.push_back({t, cx, cy, 1.4, reason_eval::AgentKind::cyclist});
    const double d_veh = 0.0 - (s.y + 0.9);
    steps.push_back({d_veh, std::hypot(s.x - cx, s.y - cy)});
  }
  return {
    reason_eval::Trajectory(id, dt, ego),
    reason_eval::Environment({reason_eval::AgentTrack("c0", cyc)}),
    steps};
}

}  // namespace fixtures

#endif  // REASON_EVAL_TESTS__FIXTURES_HPP_
