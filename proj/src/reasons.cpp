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

#include "reason_eval/reasons.hpp"

#include <cmath>

#include "reason_eval/errors.hpp"

namespace reason_eval
{
namespace
{

void check_d_vc(double d_vc)
{
  if (!std::isfinite(d_vc) || d_vc < 0.0) {
    throw InvalidArgument("d_vc must be finite and non-negative");
  }
}

void check_step(const FollowClocks & clocks, double dt)
{
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw InvalidArgument("dt must be positive");
  }
  if (!(clocks.t_elapsed >= 0.0) || !(clocks.t_follow >= 0.0)) {
    throw InvalidState("follow clocks must be non-negative");
  }
}

}  // namespace

double policymaker_step(const GeometryInputs & g, const ReasonParams & params)
{
  if (!std::isfinite(g.d_veh)) {
    throw InvalidArgument("d_veh must be finite");
  }
  if (g.d_veh > 0.0) {
    return 1.0;
  }
  return std::exp(params.k1 * g.d_veh);
}

StepResult driver_step(
  const GeometryInputs & g, FollowClocks clocks, double dt, const ReasonParams & params)
{
  check_d_vc(g.d_vc);
  check_step(clocks, dt);
  double score = 1.0;
  if (!(clocks.t_elapsed < params.t_driver || g.d_vc > params.d_driver)) {
    score = std::exp(-params.k2 * (clocks.t_elapsed - params.t_driver));
  }
  if (g.d_vc <= params.d_driver) {
    clocks.t_elapsed += dt;
  }
  return {score, clocks};
}

double cyclist_safety(const GeometryInputs & g, const ReasonParams & params)
{
  check_d_vc(g.d_vc);
  if (g.d_vc > params.d_th) {
    return 1.0;
  }
  return std::exp(-params.k3 * (params.d_th - g.d_vc));
}

StepResult cyclist_comfort(
  const GeometryInputs & g, FollowClocks clocks, double dt, const ReasonParams & params)
{
  check_d_vc(g.d_vc);
  check_step(clocks, dt);
  double score = 1.0;
  if (!(clocks.t_follow < params.t_th || g.d_vc > params.d_th)) {
    score = std::exp(-params.k4 * (clocks.t_follow - params.t_th));
  }
  if (g.d_vc <= params.d_th) {
    clocks.t_follow += dt;
  }
  return {score, clocks};
}

StepResult cyclist_step(
  const GeometryInputs & g, FollowClocks clocks, double dt, const ReasonParams & params)
{
  const double safety = cyclist_safety(g, params);
  const auto comfort = cyclist_comfort(g, clocks, dt, params);
  return {safety * comfort.score, comfort.clocks};
}

}  // namespace reason_eval
