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

from fractions import Fraction

import pytest

import robustflow


def test_fig1_values():
    inst = robustflow.generate("fig1")
    values = {m: robustflow.solve(inst, m, gamma=1)["objective"]
              for m in ("pm", "am", "gm", "gm1")}
    assert values == {"pm": Fraction(3, 2), "am": Fraction(4, 3),
                      "gm": 2, "gm1": 2}
    assert robustflow.nominal_value(inst) == 3


def test_solution_reevaluates():
    inst = robustflow.generate("bottleneck", gamma=1, beta=2)
    result = robustflow.solve(inst, "pm")
    report = robustflow.evaluate(inst, result["flow"])
    assert report["feasible"]
    assert report["robust_value"] == result["objective"] == 2


def test_dynamic_example():
    inst = robustflow.generate("ti-example")
    assert robustflow.solve(inst, "dgm")["objective"] == 2
    tr = robustflow.solve(inst, "tr")
    assert tr["objective"] == Fraction(3, 2)
    assert tr["report"]["robust_value"] == Fraction(3, 2)


def test_errors_carry_codes():
    with pytest.raises(robustflow.RobustFlowError) as err:
        robustflow.generate("partition", b=[1, 2])
    assert err.value.code == "invalid_argument"
    with pytest.raises(robustflow.RobustFlowError) as err:
        robustflow.solve(robustflow.generate("fig1"), "nope", gamma=1)
    assert err.value.code == "invalid_argument"


def test_suite_report():
    assert "embedding" in robustflow.suite_names()
    report = robustflow.run_suite("embedding", seeds=2)
    assert report["summary"]["passed"] is True
