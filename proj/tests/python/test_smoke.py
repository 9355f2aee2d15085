# Copyright 2026 The ppcake Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib
from fractions import Fraction as F

import pytest

import ppcake

DATA = pathlib.Path(
    os.environ.get("PPCAKE_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))

WORKED = [
    [("0", "0.2")],
    [("0", "0.25")],
    [("0.5", "1.0")],
    [("0.5", "1.0")],
]

WORKED_ALLOCATION = [
    [(F(0), F(1, 8))],
    [(F(1, 8), F(1, 5)), (F(1, 5), F(1, 4))],
    [(F(1, 2), F(3, 4))],
    [(F(3, 4), F(1))],
]


def test_parse_agents_matches_file():
    agents = ppcake.parse_agents((DATA / "worked_example.txt").read_text())
    assert agents == [[(F(0), F(1, 5))], [(F(0), F(1, 4))],
                      [(F(1, 2), F(1))], [(F(1, 2), F(1))]]


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        ppcake.parse_agents("1: [0, 0.5\n")


def test_run_worked_example():
    out = ppcake.run(WORKED)
    assert not out["aborted"]
    assert out["allocation"] == WORKED_ALLOCATION
    assert (out["L"], out["d"], out["Q"]) == (1, 2, 100)
    assert out["messages"] > 0


@pytest.mark.parametrize("mode", ["exhaustive", "polynomial"])
def test_oracle_agrees(mode):
    assert ppcake.oracle_allocate(WORKED, mode) == WORKED_ALLOCATION
    assert ppcake.oracle_check(WORKED, mode=mode)["ok"]


def test_fractions_are_accepted():
    agents = [[(F(0), F(1, 2))], [(F(1, 2), 1)]]
    out = ppcake.run(agents, mode="polynomial", pad_iterations=True)
    assert out["allocation"] == [[(F(0), F(1, 2))], [(F(1, 2), F(1))]]


def test_fairness():
    ef, prop, _ = ppcake.check_fairness(WORKED, WORKED_ALLOCATION)
    assert ef and prop


def test_cheater_aborts():
    agents = [[("0", "0.5")], [("0.7", "0.3")]]
    out = ppcake.run(agents)
    assert out["aborted"]
    assert out["cheaters"] == [2]
    assert out["allocation"] == []


def test_transcript_is_deterministic():
    a = ppcake.run(WORKED, seed=7, with_transcript=True)
    b = ppcake.run(WORKED, seed=7, with_transcript=True)
    assert a["transcript"] == b["transcript"]


def test_share_audit_small():
    res = ppcake.audit_shares(n=5, samples=2000)
    assert res["t"] == 3
    assert len(res["tests"]) == 10
