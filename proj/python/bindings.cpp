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

// Python bindings. Structured results cross the boundary as JSON text or plain
// containers so the Python side needs no extra type definitions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reason_eval/analysis.hpp"
#include "reason_eval/commands.hpp"
#include "reason_eval/config.hpp"
#include "reason_eval/errors.hpp"
#include "reason_eval/io.hpp"
#include "reason_eval/reasons.hpp"
#include "reason_eval/scoring.hpp"

namespace py = pybind11;
namespace re = reason_eval;

namespace
{

re::WeightVector make_weights(
  const std::vector<double> & w, const std::optional<std::vector<double>> & ideal)
{
  return ideal ? re::WeightVector(w, *ideal) : re::WeightVector(w);
}

py::dict trajectory_to_dict(const re::Trajectory & traj)
{
  std::vector<double> t, x, y, heading, speed;
  for (const auto & s : traj.states()) {
    t.push_back(s.t);
    x.push_back(s.x);
    y.push_back(s.y);
    heading.push_back(s.heading);
    speed.push_back(s.speed);
  }
  py::dict d;
  d["id"] = traj.id();
  d["dt"] = traj.dt();
  d["t"] = t;
  d["x"] = x;
  d["y"] = y;
  d["heading"] = heading;
  d["speed"] = speed;
  return d;
}

py::dict sweep_to_dict(const re::SweepResult & sweep)
{
  std::vector<std::vector<double>> weights, scores;
  std::vector<double> balance;
  std::vector<std::string> best;
  for (const auto & c : sweep.cells) {
    weights.push_back(c.weights.w());
    scores.push_back(c.scores);
    balance.push_back(c.balance);
    best.push_back(c.best);
  }
  py::dict d;
  d["candidate_ids"] = sweep.candidate_ids;
  d["tie_threshold"] = sweep.tie_threshold;
  d["weights"] = weights;
  d["scores"] = scores;
  d["balance"] = balance;
  d["best"] = best;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Multi-stakeholder reason-based trajectory evaluation";
  m.attr("__version__") = REASON_EVAL_VERSION;

  static py::exception<re::Error> error(m, "ReasonEvalError", PyExc_ValueError);
  static py::exception<re::IoError> io_error(m, "ReasonEvalIoError", PyExc_OSError);
  py::register_exception_translator([](std::exception_ptr p) {
      try {
        if (p) std::rethrow_exception(p);
      } catch (const re::IoError & e) {
        PyErr_SetString(io_error.ptr(), e.what());
      } catch (const re::Error & e) {
        PyErr_SetString(error.ptr(), e.what());
      }
    });

  py::class_<re::ReasonParams>(m, "ReasonParams")
    .def(py::init<>())
    .def_readwrite("k1", &re::ReasonParams::k1)
    .def_readwrite("k2", &re::ReasonParams::k2)
    .def_readwrite("k3", &re::ReasonParams::k3)
    .def_readwrite("k4", &re::ReasonParams::k4)
    .def_readwrite("d_driver", &re::ReasonParams::d_driver)
    .def_readwrite("t_driver", &re::ReasonParams::t_driver)
    .def_readwrite("d_th", &re::ReasonParams::d_th)
    .def_readwrite("t_th", &re::ReasonParams::t_th);

  py::class_<re::RunConfig>(m, "RunConfig")
    .def_property_readonly("weights", [](const re::RunConfig & c) { return c.weights.w(); })
    .def_property_readonly("ideal_weights", [](const re::RunConfig & c) { return c.weights.w_star(); })
    .def_property_readonly("agent_ids", [](const re::RunConfig & c) {
        std::vector<std::string> ids;
        for (const auto & a : c.agents) ids.push_back(a.id());
        return ids;
      })
    .def_property_readonly("reasons", [](const re::RunConfig & c) { return c.reasons; })
    .def("with_weights", [](re::RunConfig c, const std::vector<double> & w,
      const std::optional<std::vector<double>> & ideal) {
        c.weights = make_weights(w, ideal);
        return c;
      }, py::arg("weights"), py::arg("ideal") = py::none())
    .def("to_yaml", &re::to_yaml);

  m.def("default_config", &re::default_run_config);
  m.def("load_config", &re::load_config, py::arg("path"));
  m.def("parse_config", [](const std::string & text) { return re::parse_config(text); },
    py::arg("text"));

  m.def("balance", [](const std::vector<double> & w, const std::optional<std::vector<double>> & ideal) {
      return re::balance(make_weights(w, ideal));
    }, py::arg("weights"), py::arg("ideal") = py::none());

  m.def("policymaker_step", [](double d_veh, const re::ReasonParams & p) {
      return re::policymaker_step({d_veh, 0.0}, p);
    }, py::arg("d_veh"), py::arg("params") = re::ReasonParams{});
  m.def("driver_step", [](double d_vc, double t_elapsed, double dt, const re::ReasonParams & p) {
      const auto r = re::driver_step({0.0, d_vc}, {t_elapsed, 0.0}, dt, p);
      return py::make_tuple(r.score, r.clocks.t_elapsed);
    }, py::arg("d_vc"), py::arg("t_elapsed"), py::arg("dt") = re::kDefaultDt,
    py::arg("params") = re::ReasonParams{});
  m.def("cyclist_step", [](double d_vc, double t_follow, double dt, const re::ReasonParams & p) {
      const auto r = re::cyclist_step({0.0, d_vc}, {0.0, t_follow}, dt, p);
      return py::make_tuple(r.score, r.clocks.t_follow);
    }, py::arg("d_vc"), py::arg("t_follow"), py::arg("dt") = re::kDefaultDt,
    py::arg("params") = re::ReasonParams{});

  m.def("generate", [](const re::RunConfig & cfg) {
      py::list out;
      for (const auto & t : re::prepare_candidates(cfg).candidates) out.append(trajectory_to_dict(t));
      return out;
    }, py::arg("config"));

  m.def("evaluate_json", [](const re::RunConfig & cfg) {
      const auto set = re::prepare_candidates(cfg);
      const auto report = re::evaluate_candidates(
        set.candidates, set.scenario.environment, cfg.agents, cfg.weights, cfg.reasons,
        set.scenario.geometry, cfg.analysis.tie_epsilon);
      return re::io::report_to_json(report);
    }, py::arg("config"));

  m.def("sweep", [](const re::RunConfig & cfg, std::optional<unsigned> resolution) {
      const auto set = re::prepare_candidates(cfg);
      return sweep_to_dict(re::simplex_sweep(
        set.candidates, set.scenario.environment, cfg.agents, cfg.reasons, set.scenario.geometry,
        resolution.value_or(cfg.analysis.resolution), cfg.analysis.sweep_tie_threshold,
        cfg.weights.w_star()));
    }, py::arg("config"), py::arg("resolution") = py::none());

  m.def("monitor", [](const std::vector<double> & series, double threshold) {
      return re::monitor_scores(series, threshold);
    }, py::arg("series"), py::arg("threshold") = re::kDefaultMonitorThreshold);

  m.def("run_command", [](const std::string & command, const re::RunConfig & cfg,
    const std::filesystem::path & out_dir, const std::optional<std::string> & candidate) {
      std::ostringstream log;
      if (command == "generate") {
        re::run_generate(cfg, out_dir);
      } else if (command == "evaluate") {
        re::run_evaluate(cfg, out_dir, log);
      } else if (command == "sweep") {
        re::run_sweep(cfg, out_dir);
      } else if (command == "invert") {
        if (!candidate) throw re::InvalidArgument("invert needs a candidate id");
        re::run_invert(cfg, *candidate, out_dir);
      } else {
        throw re::InvalidArgument("unknown command '" + command + "'");
      }
      return log.str();
    }, py::arg("command"), py::arg("config"), py::arg("out_dir"),
    py::arg("candidate") = py::none());
}
