# Copyright 2026 The nilaut Authors
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

"""Exact genus and group-order bounds for nilpotent Galois covers of curves."""

from ._nilaut import (
    JSON_SCHEMA,
    CapExceeded,
    ClaimMismatch,
    Error,
    InconsistentTower,
    TooLarge,
    admissible,
    admissible_orders,
    back_solve_different,
    count_r1,
    example_group,
    example_ids,
    genus_ladder,
    hurwitz_two_g_minus_2,
    min_different_exponent,
    r1_bound,
    ratio_sup,
    solve_genus,
    sweep,
    theorem_bound,
    theorem_certificate,
    verify_example,
)

__all__ = [
    "JSON_SCHEMA",
    "CapExceeded",
    "ClaimMismatch",
    "Error",
    "InconsistentTower",
    "TooLarge",
    "admissible",
    "admissible_orders",
    "back_solve_different",
    "count_r1",
    "example_group",
    "example_ids",
    "genus_ladder",
    "hurwitz_two_g_minus_2",
    "min_different_exponent",
    "r1_bound",
    "ratio_sup",
    "solve_genus",
    "sweep",
    "theorem_bound",
    "theorem_certificate",
    "verify_example",
]
