"""Graded Betti numbers and complete intersections of shifted numerical semigroup rings."""

import json

from . import _core
from ._core import (
    Semigroup,
    ShiftBettiError,
    ci_check_3gen,
    is_complete_intersection,
    reproduce_table,
)

__all__ = [
    "Semigroup",
    "ShiftBettiError",
    "betti",
    "ci_check_3gen",
    "critical",
    "is_complete_intersection",
    "minimal_generators",
    "reproduce_table",
    "run",
    "scan",
    "verify_hs3",
    "verify_theorem_a",
    "verify_theorem_b",
]


def betti(gens, bound=None):
    """Graded Betti table: {"totals": [...], "rows": {degree: [...]}}."""
    table = json.loads(_core._betti_json(list(gens), bound))
    table["rows"] = {int(k): v for k, v in table["rows"].items()}
    return table


def minimal_generators(gens, bound=None):
    return json.loads(_core._generators_json(list(gens), bound))


def critical(gens):
    return json.loads(_core._critical_json(list(gens)))


def scan(abc, j_min, j_max, offset=1, jobs=1, bound=None):
    a, b, c = abc
    return json.loads(_core._scan_json(a, b, c, j_min, j_max, offset, jobs, bound))


def verify_theorem_b(abc, j_min, j_max, offset=0, jobs=1):
    a, b, c = abc
    return json.loads(_core._verify_b_json(a, b, c, j_min, j_max, offset, jobs))


def verify_theorem_a(abc, n_max, include_t=True, offset=0):
    a, b, c = abc
    return json.loads(_core._verify_a_json(a, b, c, n_max, include_t, offset))


def verify_hs3(q_max, ab_max):
    return json.loads(_core._verify_hs3_json(q_max, ab_max))


def run(*args):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
