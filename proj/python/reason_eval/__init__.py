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

"""Reason-based trajectory evaluation with balanced stakeholder weights."""

import json

from ._core import (
    ReasonEvalError,
    ReasonEvalIoError,
    ReasonParams,
    RunConfig,
    __version__,
    balance,
    cyclist_step,
    default_config,
    driver_step,
    generate,
    load_config,
    monitor,
    parse_config,
    policymaker_step,
    run_command,
    sweep,
)


def evaluate(config):
    """Score every candidate; returns the report as a dict."""
    from ._core import evaluate_json

    return json.loads(evaluate_json(config))


__all__ = [
    "ReasonEvalError",
    "ReasonEvalIoError",
    "ReasonParams",
    "RunConfig",
    "__version__",
    "balance",
    "cyclist_step",
    "default_config",
    "driver_step",
    "evaluate",
    "generate",
    "load_config",
    "monitor",
    "parse_config",
    "policymaker_step",
    "run_command",
    "sweep",
]
