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


from fractions import Fraction

import pytest

import nilaut


def test_hurwitz_and_genus():
    assert nilaut.hurwitz_two_g_minus_2(16, 0, [2, 4, 8]) == 2
    assert nilaut.hurwitz_two_g_minus_2(10, 0, [(5, 4), (10, 14)], p=2) == 2
    res = nilaut.solve_genus(16, 0, [2, 4, 8])
    assert res["genus"] == 2 and res["feasible"]
    neg = nilaut.solve_genus(2, 0, [])
    assert neg["genus"] == -1 and not neg["feasible"]
    assert nilaut.back_solve_different(10, 0, 2, [5, (10, None)], p=2) == 14
    with pytest.raises(nilaut.InconsistentTower):
        nilaut.back_solve_different(16, 0, 3, [2, 4, (8, None)])


def test_min_different_exponent():
    assert nilaut.min_different_exponent(8, 5) == 7
    assert nilaut.min_different_exponent(10, 2) == 14
    assert nilaut.min_different_exponent(4, 2) == 6


def test_admissibility():
    assert nilaut.admissible([2, 4, 8], p=3, order=16)["admissible"]
    verdict = nilaut.admissible([2, 2, 3, 4], p=5)
    assert not verdict["admissible"]
    assert verdict["violations"]
    assert nilaut.admissible_orders([2, 2, 3, 3], p=7) == [6]


def test_ratio_and_bounds():
    rep = nilaut.ratio_sup([2, 4, 8], p=3)
    assert Fraction(rep["ratio"]["num"], rep["ratio"]["den"]) == 16
    rep = nilaut.ratio_sup([2, 2, 2, 16])
    assert Fraction(rep["ratio"]["num"], rep["ratio"]["den"]) == Fraction(32, 7)
    assert nilaut.theorem_bound(3) == 16
    assert nilaut.r1_bound(5, 10) == 125


def test_sweep_and_certificate():
    res = nilaut.sweep(r_min=3, r_max=3, chars=[0], threshold=16)
    assert [r["signature"] for r in res["reports"]] == [[2, 4, 8]]
    cert = nilaut.theorem_certificate(2)["certificate"]
    assert cert["holds"] and cert["holdsBeyondCaps"]
    ext = sorted((tuple(e["signature"]), e["char"]) for e in cert["extremal"])
    assert ext == [((2, 10), 5), ((5, 10), 2)]


def test_ladder():
    rows = nilaut.genus_ladder(2, 16, 3)
    assert rows[1]["genus"] == 17
    assert all(Fraction(r["ratio"]["num"], r["ratio"]["den"]) == 16 for r in rows)


def test_examples():
    assert set(nilaut.example_ids()) == {"r3-kummer", "r4-kummer", "r2-p2", "r2-p5", "r1"}
    rep = nilaut.verify_example("r3-kummer")
    assert rep["schema"] == nilaut.JSON_SCHEMA == 1
    assert rep["verified"] and rep["genus"] == 2 and rep["type"] == [2, 4, 8]
    assert rep["order"] == 16
    assert nilaut.example_group("r2-p2")["order"] == 10
    r1 = nilaut.verify_example("r1", p=7)
    assert r1["order"] == 343 and r1["verified"]


def test_count_r1():
    assert nilaut.count_r1(5, 1)["count"] == 125
    assert nilaut.count_r1(3, 2)["count"] == 243
    with pytest.raises(nilaut.TooLarge):
        nilaut.count_r1(11, 3)
