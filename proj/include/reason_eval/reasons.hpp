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

#ifndef REASON_EVAL__REASONS_HPP_
#define REASON_EVAL__REASONS_HPP_

#include "reason_eval/core_model.hpp"

namespace reason_eval
{

/// Cumulative close-following times threaded through one trajectory evaluation.
struct FollowClocks
{
  double t_elapsed{0.0};  // driver: time spent within d_driver of the cyclist
  double t_follow{0.0};   // cyclist: time spent within d_th of the ego
};

/// Per-step geometry consumed by the reason functions.
struct GeometryInputs
{
  double d_veh{0.0};  // signed lane margin, negative = encroachment depth (m)
  double d_vc{0.0};   // ego-cyclist distance (m)
};

struct StepResult
{
  double score;
  FollowClocks clocks;
};

/// Lane compliance: 1 while on the legal side, exp(k1 * d_veh) when encroaching.
double policymaker_step(const GeometryInputs & g, const ReasonParams & params);

/// Driver efficiency. Scores step l with the clock at l, then advances t_elapsed
/// by dt when d_vc <= d_driver.
StepResult driver_step(
  const GeometryInputs & g, FollowClocks clocks, double dt, const ReasonParams & params);

/// Cyclist spatial safety.
double cyclist_safety(const GeometryInputs & g, const ReasonParams & params);

/// Cyclist temporal comfort; advances t_follow by dt when d_vc <= d_th, after scoring.
StepResult cyclist_comfort(
  const GeometryInputs & g, FollowClocks clocks, double dt, const ReasonParams & params);

/// Product of safety and comfort with a single t_follow update.
StepResult cyclist_step(
  const GeometryInputs & g, FollowClocks clocks, double dt, const ReasonParams & params);

}  // namespace reason_eval

#endif  // REASON_EVAL__REASONS_HPP_
