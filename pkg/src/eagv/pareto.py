"""Pareto frontiers of achievable (d_z, d_x) pairs and the Table 1 comparison.

A frontier holds the maximal corners of a downward-closed feasible set:
pairs ``(d1, d2)`` that are feasible while both ``(d1 + 1, d2)`` and
``(d1, d2 + 1)`` are not. Here ``d1`` is the Z (phase) distance and ``d2``
the X (bit) distance.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .bounds import BoundParamsNew, BoundParamsOld, new_lhs_parts, old_lhs_parts

Pair = tuple[int, int]

NEW = "new-bound"
OLD = "old-bound"


@dataclass(frozen=True)
class ParetoFrontier:
    pairs: tuple[Pair, ...]
    source: str = ""
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for a, b in zip(self.pairs, self.pairs[1:]):
            if not (a[0] > b[0] and a[1] < b[1]):
                raise ValueError(f"not a staircase: {a} then {b}")
        if any(d1 < 1 or d2 < 1 for d1, d2 in self.pairs):
            raise ValueError("distances must be >= 1")

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.pairs], separators=(",", ":"))


def frontier(feasible: Callable[[int, int], bool], d_cap: int, source: str = "", params=None) -> ParetoFrontier:
    """Staircase sweep over ``1..d_cap`` in each coordinate.

    ``feasible`` must be downward closed. For every ``d1`` the largest
    feasible ``d2`` is found by walking down from the previous column's
    value, so the predicate is called O(d_cap) times in total.
    """
    if d_cap < 1:
        raise ValueError("d_cap must be >= 1")
    heights = []
    h = d_cap
    for d1 in range(1, d_cap + 1):
        while h >= 1 and not feasible(d1, h):
            h -= 1
        if h == 0:
            break
        heights.append(h)
    heights.append(0)
    pairs = [(d1, heights[d1 - 1]) for d1 in range(1, len(heights)) if heights[d1] < heights[d1 - 1]]
    pairs.reverse()
    return ParetoFrontier(tuple(pairs), source, dict(params or {}))


def pareto_new(q: int, n: int, ell: int, c: int) -> ParetoFrontier:
    BoundParamsNew(q, n, ell, c, 1, 1).validate()

    def feasible(d_z, d_x):
        num, den = new_lhs_parts(q, n, ell, c, d_x, d_z)
        return num < den

    return frontier(feasible, n, NEW, {"q": q, "n": n, "ell": ell, "c": c})


def pareto_old(q: int, n: int, k1: int, k2: int, c: int) -> ParetoFrontier:
    BoundParamsOld(q, n, k1, k2, c, 1, 1).validate()

    def feasible(d_z, d_x):
        num, den = old_lhs_parts(q, n, k1, k2, c, d_z, d_x)
        return num < den

    return frontier(feasible, n, OLD, {"q": q, "n": n, "k1": k1, "k2": k2, "c": c})


def improves(new_f, old_f) -> bool:
    """True iff every pair of ``old_f`` is weakly dominated by some pair of ``new_f``."""
    new_pairs = list(new_f)
    return all(any(a >= d1 and b >= d2 for a, b in new_pairs) for d1, d2 in old_f)


# (q, n, k1, k2, c, P_old, P_new) as printed in the published comparison table.
TABLE1 = [
    (4, 15, 3, 1, 1, [(2, 1)], [(2, 1), (1, 2)]),
    (5, 24, 5, 3, 3, [(2, 2)], [(4, 1), (2, 2), (1, 4)]),
    (7, 19, 7, 4, 4, [(4, 2)], [(7, 1), (5, 2), (4, 3), (3, 4), (2, 5), (1, 7)]),
    (7, 19, 13, 10, 10, [(8, 6)],
     [(19, 2), (16, 3), (12, 4), (10, 5), (9, 6), (8, 7), (7, 8), (6, 9), (5, 10), (4, 12), (3, 16), (2, 19)]),
    (8, 63, 7, 1, 1, [(3, 1)], [(4, 1), (2, 2), (1, 4)]),
    (8, 63, 11, 3, 3, [(5, 2)], [(6, 1), (5, 2), (4, 3), (3, 4), (2, 5), (1, 6)]),
    (9, 40, 10, 5, 5, [(5, 3)], [(8, 1), (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (1, 8)]),
    (9, 40, 12, 3, 3, [(6, 2)], [(8, 1), (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (1, 8)]),
    (9, 40, 12, 7, 7, [(6, 3)], [(11, 1), (9, 2), (7, 3), (6, 4), (5, 5), (4, 6), (3, 7), (2, 9), (1, 11)]),
    (16, 51, 9, 3, 3, [(5, 2)], [(7, 1), (5, 2), (4, 3), (3, 4), (2, 5), (1, 7)]),
    (16, 51, 11, 1, 1, [(6, 1)], [(7, 1), (5, 2), (4, 3), (3, 4), (2, 5), (1, 7)]),
    (16, 51, 11, 3, 3, [(6, 2)], [(8, 1), (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (1, 8)]),
    (16, 51, 17, 5, 5, [(10, 3)],
     [(13, 1), (11, 2), (10, 3), (9, 4), (8, 5), (6, 6), (5, 8), (4, 9), (3, 10), (2, 11), (1, 13)]),
    (16, 51, 19, 5, 5, [(11, 3)],
     [(15, 1), (13, 2), (11, 3), (10, 4), (9, 5), (8, 6), (7, 7), (6, 8), (5, 9), (4, 10), (3, 11), (2, 13),
      (1, 15)]),
    (16, 51, 23, 3, 3, [(14, 2)],
     [(16, 1), (14, 2), (13, 3), (11, 4), (10, 5), (9, 6), (8, 7), (7, 8), (6, 9), (5, 10), (4, 11), (3, 13),
      (2, 14), (1, 16)]),
    (16, 51, 23, 9, 9, [(14, 5)],
     [(21, 1), (19, 2), (17, 3), (16, 4), (14, 5), (13, 6), (12, 7), (11, 8), (10, 9), (9, 10), (8, 11), (7, 12),
      (6, 13), (5, 14), (4, 16), (3, 17), (2, 19), (1, 21)]),
    (16, 51, 27, 5, 5, [(17, 3)],
     [(21, 1), (19, 2), (17, 3), (16, 4), (14, 5), (13, 6), (12, 7), (11, 8), (10, 9), (9, 10), (8, 11), (7, 12),
      (6, 13), (5, 14), (4, 16), (3, 17), (2, 19), (1, 21)]),
    (25, 48, 6, 4, 4, [(4, 2)], [(6, 1), (5, 2), (3, 3), (2, 5), (1, 6)]),
    (25, 48, 10, 4, 4, [(6, 2)], [(8, 1), (7, 2), (6, 3), (5, 4), (4, 5), (3, 6), (2, 7), (1, 8)]),
    (25, 48, 10, 7, 7, [(6, 4)], [(11, 1), (9, 2), (8, 3), (7, 4), (5, 5), (4, 7), (3, 8), (2, 9), (1, 11)]),
    (25, 48, 12, 3, 3, [(7, 2)], [(9, 1), (8, 2), (6, 3), (5, 4), (4, 5), (3, 6), (2, 8), (1, 9)]),
    (25, 48, 12, 6, 6, [(7, 4)],
     [(11, 1), (10, 2), (8, 3), (7, 4), (6, 5), (5, 6), (4, 7), (3, 8), (2, 10), (1, 11)]),
]


@dataclass
class RowReport:
    q: int
    n: int
    k1: int
    k2: int
    c: int
    expected_old: list[Pair]
    expected_new: list[Pair]
    actual_old: list[Pair]
    actual_new: list[Pair]
    improves: bool

    @property
    def match_old(self) -> bool:
        return set(self.expected_old) == set(self.actual_old)

    @property
    def match_new(self) -> bool:
        return set(self.expected_new) == set(self.actual_new)

    @property
    def match(self) -> bool:
        return self.match_old and self.match_new

    def differences(self) -> dict:
        out = {}
        for name, exp, act in (("old", self.expected_old, self.actual_old), ("new", self.expected_new, self.actual_new)):
            missing = sorted(set(exp) - set(act), reverse=True)
            extra = sorted(set(act) - set(exp), reverse=True)
            if missing or extra:
                out[name] = {"missing": missing, "extra": extra}
        return out

    def to_dict(self) -> dict:
        return {
            "q": self.q, "n": self.n, "k1": self.k1, "k2": self.k2, "c": self.c,
            "expected_old": [list(p) for p in self.expected_old],
            "actual_old": [list(p) for p in self.actual_old],
            "expected_new": [list(p) for p in self.expected_new],
            "actual_new": [list(p) for p in self.actual_new],
            "match": self.match,
            "improves": self.improves,
        }


@dataclass
class Table1Report:
    rows: list[RowReport]

    @property
    def success(self) -> bool:
        return all(r.match for r in self.rows)

    def to_dict(self) -> dict:
        return {"success": self.success, "rows": [r.to_dict() for r in self.rows]}


def compute_row(q: int, n: int, k1: int, k2: int, c: int, expected_old=(), expected_new=()) -> RowReport:
    old_f = pareto_old(q, n, k1, k2, c)
    new_f = pareto_new(q, n, k1 + k2, c)
    return RowReport(q, n, k1, k2, c, list(expected_old), list(expected_new),
                     list(old_f.pairs), list(new_f.pairs), improves(new_f, old_f))


def reproduce_table1(rows=None) -> Table1Report:
    """Recompute both frontiers for the embedded table rows (all, or the given 0-based indices)."""
    indices = range(len(TABLE1)) if rows is None else rows
    out = []
    for i in indices:
        q, n, k1, k2, c, exp_old, exp_new = TABLE1[i]
        out.append(compute_row(q, n, k1, k2, c, exp_old, exp_new))
    return Table1Report(out)
