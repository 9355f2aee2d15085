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
"""Simulated privacy-preserving cake cutting.

Valuations are lists of half-open intervals per agent. Endpoints may be
Fractions, ints, or decimal strings; results come back as Fractions.
"""

from fractions import Fraction

from . import _core
from ._core import FieldError, ParseError, ValuationError, audit_shares

__all__ = [
    "FieldError",
    "ParseError",
    "ValuationError",
    "audit_shares",
    "check_fairness",
    "oracle_allocate",
    "oracle_check",
    "parse_agents",
    "run",
]


def _text(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _encode(agents):
    return [[(_text(lo), _text(hi)) for lo, hi in agent] for agent in agents]


def _decode(pieces):
    return [[(Fraction(lo), Fraction(hi)) for lo, hi in agent] for agent in pieces]


def parse_agents(text):
    """Parses an agent file body into per-agent interval lists."""
    return _decode(_core.parse_agents(text))


def run(agents, **kwargs):
    """Runs the protocol; see the CLI for option meanings."""
    out = _core.run(_encode(agents), **kwargs)
    out["allocation"] = _decode(out["allocation"])
    return out


def oracle_allocate(agents, mode="exhaustive"):
    """Plaintext reference allocation."""
    return _decode(_core.oracle_allocate(_encode(agents), mode))


def oracle_check(agents, **kwargs):
    return _core.oracle_check(_encode(agents), **kwargs)


def check_fairness(agents, allocation):
    """Returns (envy_free, proportional, detail)."""
    return _core.check_fairness(_encode(agents), _encode(allocation))
