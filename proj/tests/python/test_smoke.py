# Copyright 2026 The reason_eval Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import math
import os
from pathlib import Path

import pytest

import reason_eval as re_

SOURCE_DIR = Path(os.environ.get("REASON_EVAL_SOURCE_DIR", Path(__file__).resolve().parents[2]))
DEFAULT_CONFIG = SOURCE_DIR / "config" / "default.yaml"


def test_version():
    assert re_.__version__.count(".") == 2


def test_balance_values():
    assert re_.balance([1 / 3, 1 / 3, 1 / 3]) == 1.0
    assert re_.balance([0.2, 0.6, 0.2]) == pytest.approx(0.404040820577345752, abs=1e-12)
    assert re_.balance([0.0, 0.5, 0.5]) == 0.0
    assert re_.balance([0.5, 0.3, 0.2], ideal=[0.5, 0.3, 0.2]) == 1.0


def test_balance_rejects_bad_weights():
    with pytest.raises(re_.ReasonEvalError, match="sum to 1"):
        re_.balance([0.5, 0.6, 0.2])
    with pytest.raises(ValueError):
        re_.balance([0.5, 0.5], ideal=[1.0, 0.0])


def test_reason_steps():
    assert re_.policymaker_step(-2.0) == pytest.approx(math.exp(-0.4), abs=1e-15)
    score, clock = re_.driver_step(5.0, 10.0)
    assert score == pytest.approx(math.exp(-1.0), abs=1e-15)
    assert clock == pytest.approx(10.1)
    params = re_.ReasonParams()
    params.k3 = 0.5
    score, _ = re_.cyclist_step(1.0, 0.0, params=params)
    assert score == pytest.approx(math.exp(-0.5), abs=1e-15)


def test_default_evaluation_ranking():
    cfg = re_.load_config(str(DEFAULT_CONFIG))
    report = re_.evaluate(cfg)
    assert report["ranking"][0] == "T1"
    assert report["ranking"][-1] == "T4"
    assert len(report["candidates"]) == 4


def test_generate_shapes():
    trajs = re_.generate(re_.default_config())
    assert [t["id"] for t in trajs] == ["T1", "T2", "T3", "T4"]
    assert all(len(t["x"]) == 201 for t in trajs)


def test_sweep_vertices():
    sw = re_.sweep(re_.default_config(), resolution=100)
    assert len(sw["best"]) == 5151
    cells = dict(zip((tuple(round(v * 100) for v in w) for w in sw["weights"]), sw["best"]))
    assert cells[(98, 1, 1)] == "T4"
    assert cells[(1, 98, 1)] == "T1"
    assert cells[(1, 1, 98)] == "T3"
    assert cells[(100, 0, 0)] == "tie"


def test_monitor():
    assert re_.monitor([0.9, 0.8, 0.65, 0.4], 0.7) == 2
    assert re_.monitor([0.9, 0.8, 0.75]) is None
    with pytest.raises(re_.ReasonEvalError):
        re_.monitor([])


def test_config_errors():
    with pytest.raises(re_.ReasonEvalError, match="horizn"):
        re_.parse_config("scenario:\n  horizn: 3\n")
    with pytest.raises(OSError):
        re_.load_config("/nonexistent/config.yaml")
    cfg = re_.default_config().with_weights([0.2, 0.6, 0.2])
    assert cfg.weights == [0.2, 0.6, 0.2]


def test_run_command_writes_csv(tmp_path):
    cfg = re_.default_config()
    re_.run_command("evaluate", cfg, tmp_path)
    with open(tmp_path / "scores.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert {r["candidate"] for r in rows} == {"T1", "T2", "T3", "T4"}
    re_.run_command("invert", cfg, tmp_path, candidate="T3")
    assert (tmp_path / "inverse_T3.csv").exists()
