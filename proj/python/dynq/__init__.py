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

"""Dynamical quantum minors, Pfaffians and identity checks."""

import json

from ._core import (
    DEFAULT_SEED,
    REPORT_SCHEMA,
    UsageError,
    det,
    minor,
    pf,
    suite_names,
    verify_json,
)

__all__ = [
    "DEFAULT_SEED",
    "REPORT_SCHEMA",
    "UsageError",
    "det",
    "minor",
    "pf",
    "pf_tilde",
    "suite_names",
    "verify",
]


def pf_tilde(m, n, I=()):
    return pf(m, n, list(I), tilde=True)


def verify(suite, **params):
    """Run a verification suite and return the report as a dict."""
    return json.loads(verify_json(suite, **params))
