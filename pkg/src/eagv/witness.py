"""Search for explicit codes certifying the symplectic GV bound at small sizes.

Subspaces of F_q^{2n} of dimension ``ell`` are drawn uniformly (random
mode) or walked one canonical RREF at a time (exhaustive mode). Those with
the requested entanglement degree are tested with
:func:`eagv.symplectic.detection_check`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .bounds import BoundParamsNew, check_new
from .gf import Field, make_field
from .symplectic import (
    DEFAULT_BUDGET,
    CodeSpace,
    analyze_code,
    detection_check,
    gram_matrix,
    rank_gf,
    rref,
)

RANDOM = "random"
EXHAUSTIVE = "exhaustive"


class SearchError(RuntimeError):
    pass


def gaussian_binomial(N: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^N."""
    if k < 0 or k > N:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (N - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def iter_rref(field: Field, k: int, N: int) -> Iterator[np.ndarray]:
    """Every k x N reduced row-echelon matrix of rank k, pivot sets in lexicographic order."""
    q = field.q
    for pivots in itertools.combinations(range(N), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, N) if j not in pivot_set]
        base = np.zeros((k, N), dtype=np.int64)
        for i, pc in enumerate(pivots):
            base[i, pc] = 1
        for vals in itertools.product(range(q), repeat=len(free)):
            M = base.copy()
            for (i, j), a in zip(free, vals):
                M[i, j] = a
            yield M


def sample_subspace(field: Field, n: int, ell: int, rng: np.random.Generator) -> CodeSpace:
    """Uniformly random ``ell``-dimensional subspace of F_q^{2n}."""
    if not 0 <= ell <= 2 * n:
        raise ValueError("need 0 <= ell <= 2n")
    return analyze_code(field, n, _sample_basis(field, n, ell, rng))


def _sample_basis(field: Field, n: int, ell: int, rng: np.random.Generator) -> np.ndarray:
    # every subspace has the same number of full-rank generator matrices
    if ell == 0:
        return np.zeros((0, 2 * n), dtype=np.int64)
    while True:
        H = rng.integers(0, field.q, size=(ell, 2 * n), dtype=np.int64)
        R, pivots = rref(field, H)
        if len(pivots) == ell:
            return R


@dataclass(frozen=True)
class SearchConfig:
    params: BoundParamsNew
    mode: str = RANDOM
    trials: int = 10_000
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    max_subspaces: int = 10**6
    modulus: tuple[int, ...] | None = None

    def validate(self) -> None:
        self.params.validate()
        if self.mode not in (RANDOM, EXHAUSTIVE):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == RANDOM and self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mode == EXHAUSTIVE:
            p = self.params
            count = gaussian_binomial(2 * p.n, p.ell, p.q)
            if count > self.max_subspaces:
                raise SearchError(f"{count} subspaces exceed the exhaustive cap {self.max_subspaces}")


@dataclass
class WitnessReport:
    found: bool
    witness: np.ndarray | None
    trials_used: int
    bound_satisfied: bool
    mode: str
    stats: dict = field(default_factory=lambda: {"wrong_c": 0, "failed_detection": 0})
    completed: bool = False

    @property
    def contradiction(self) -> bool:
        """An exhaustive sweep came up empty although the bound promises a code."""
        return self.mode == EXHAUSTIVE and self.completed and self.bound_satisfied and not self.found

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "witness": None if self.witness is None else self.witness.tolist(),
            "trials_used": self.trials_used,
            "bound_satisfied": self.bound_satisfied,
            "mode": self.mode,
            "stats": dict(self.stats),
            "contradiction": self.contradiction,
        }


def _entanglement_degree(field: Field, basis: np.ndarray) -> int:
    return rank_gf(field, gram_matrix(field, basis)) // 2


def search_witness(cfg: SearchConfig) -> WitnessReport:
    cfg.validate()
    p = cfg.params
    field = make_field(p.q, cfg.modulus)
    satisfied, _ = check_new(p)
    report = WitnessReport(False, None, 0, satisfied, cfg.mode)

    if cfg.mode == EXHAUSTIVE:
        candidates = iter_rref(field, p.ell, 2 * p.n)
    else:
        candidates = _random_candidates(field, p, cfg.seed, cfg.trials)

    for M in candidates:
        report.trials_used += 1
        if _entanglement_degree(field, M) != p.c:
            report.stats["wrong_c"] += 1
            continue
        cs = analyze_code(field, p.n, M)
        if detection_check(cs, p.d_x, p.d_z, cfg.budget).ok:
            report.found = True
            report.witness = cs.basis
            return report
        report.stats["failed_detection"] += 1
    report.completed = True
    return report


def _random_candidates(field: Field, p: BoundParamsNew, seed: int, trials: int) -> Iterator[np.ndarray]:
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        yield _sample_basis(field, p.n, p.ell, rng)
