# Copyright 2026 The robustflow Authors
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
"""Exact robust maximum flows under arc failures and delays.

Instances and flows are plain dicts in the JSON layout used by the
`robustflow` command line tool. Values come back as `fractions.Fraction`.
"""

import json
from fractions import Fraction

from . import _robustflow

__all__ = [
    "RobustFlowError",
    "evaluate",
    "generate",
    "nominal_value",
    "run_suite",
    "solve",
    "suite_names",
]

_VALUE_KEYS = ("objective", "nominal_value", "robust_value", "worst_loss")


class RobustFlowError(Exception):
    """Raised for invalid input, guard breaches and internal failures.

    `code` is one of "invalid_argument", "guard_exceeded", "infeasible" or
    "internal".
    """

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _fraction(value):
    return Fraction(str(value))


def _convert(result):
    for key in _VALUE_KEYS:
        if key in result:
            result[key] = _fraction(result[key])
    report = result.get("report")
    if isinstance(report, dict):
        _convert(report)
    return result


def _call(fn, *args):
    try:
        return fn(*args)
    except _robustflow.Error as e:
        code, message = e.args[0] if len(e.args) == 1 else e.args
        raise RobustFlowError(code, message) from None


def generate(family, **params):
    """Returns a generated instance, e.g. generate("bottleneck", gamma=1, beta=2)."""
    return json.loads(_call(_robustflow.generate, family, json.dumps(params)))


def solve(instance, model, gamma=None, horizon=None, lex_nominal=False,
          full_scenarios=False):
    """Solves one model exactly; returns objective, report and flow."""
    text = _call(_robustflow.solve, json.dumps(instance), model, gamma, horizon,
                 lex_nominal, full_scenarios)
    return _convert(json.loads(text))


def evaluate(instance, flow, gamma=None, horizon=None):
    """Checks a flow and returns its robust report."""
    text = _call(_robustflow.evaluate, json.dumps(instance), json.dumps(flow),
                 gamma, horizon)
    return _convert(json.loads(text))


def nominal_value(instance, horizon=None):
    """Nominal maximum flow; over time when a horizon is given or stored."""
    return _fraction(json.loads(
        _call(_robustflow.nominal_value, json.dumps(instance), horizon)))


def run_suite(name, seeds=20, sizes=(), gammas=(), base_seed=1, jobs=1):
    """Runs a property suite and returns its report."""
    return json.loads(_call(_robustflow.run_suite, name, seeds, list(sizes),
                            list(gammas), base_seed, jobs))


def suite_names():
    return list(_robustflow.suite_names())
