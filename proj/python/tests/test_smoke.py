# Copyright 2026 The dynq Authors
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

import pytest

import dynq


def test_det_of_size_one_is_the_generator():
    assert dynq.det(1) == "t[1,1]"


def test_det_two_has_two_words():
    s = dynq.det(2)
    assert "t[1,1] t[2,2]" in s
    assert "t[1,2] t[2,1]" in s


def test_single_minor_is_a_generator():
    assert dynq.minor(3, [2], [3]) == "t[2,3]"


def test_pfaffian_sizes():
    assert dynq.pf(2, 1) == "b[1,2]"
    assert dynq.pf_tilde(2, 1) == "bt[2,1]"
    assert dynq.pf(2, 2).count("b[") == 12


def test_bad_sizes_raise_value_error():
    with pytest.raises(ValueError):
        dynq.det(0)
    with pytest.raises(ValueError):
        dynq.minor(2, [1, 2], [1])


def test_unknown_suite_raises():
    with pytest.raises(ValueError):
        dynq.verify("no-such-suite")


def test_verify_report_shape():
    rep = dynq.verify("xi-eta", n=2)
    assert rep["schema"] == dynq.REPORT_SCHEMA
    assert rep["verdict"] == "pass"
    assert {c["check"] for c in rep["checks"]} == {"xi-equals-eta", "rho-independence"}


def test_reports_are_deterministic():
    a = dynq.verify_json("pf-laplace", n=2, m=3, t=1, mode="randomized")
    b = dynq.verify_json("pf-laplace", n=2, m=3, t=1, mode="randomized")
    assert a == b
    assert '"verdict": "pass"' in a


def test_suite_names():
    names = dynq.suite_names()
    assert "confluence" in names and "pf-transform" in names
