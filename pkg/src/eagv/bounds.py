"""Exact evaluation of the two GV-type existence inequalities.

``check_new`` is the symplectic bound on a single ``ell``-dimensional space
C of F_q^{2n}; ``check_old`` is the conventional bound for C = C1 x C2.
Both are decided by cross-multiplied integer comparison, so nothing is ever
rounded no matter how large q^{2n} gets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .gf import is_prime_power


class InvalidParameters(ValueError):
    """A parameter tuple violates the constraints of the inequality."""


@dataclass(frozen=True)
class ExactRatio:
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def to_json(self) -> dict:
        return {"lhs_num": str(self.numerator), "lhs_den": str(self.denominator)}

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class BoundParamsNew:
    q: int
    n: int
    ell: int
    c: int
    d_x: int
    d_z: int

    def validate(self) -> None:
        _check_q(self.q)
        if self.n < 1:
            raise InvalidParameters("n < 1")
        if self.ell < 1:
            raise InvalidParameters("l < 1")
        if self.c < 0:
            raise InvalidParameters("c < 0")
        if 2 * self.c > self.ell:
            raise InvalidParameters("c > l/2")
        if self.ell >= self.n + self.c:
            raise InvalidParameters("l >= n + c")
        _check_distance("dx", self.d_x, self.n)
        _check_distance("dz", self.d_z, self.n)


@dataclass(frozen=True)
class BoundParamsOld:
    q: int
    n: int
    k1: int
    k2: int
    c: int
    d_z: int
    d_x: int

    @property
    def ell(self) -> int:
        return self.k1 + self.k2

    def validate(self) -> None:
        _check_q(self.q)
        if self.n < 1:
            raise InvalidParameters("n < 1")
        if min(self.k1, self.k2, self.c) < 0:
            raise InvalidParameters("k1, k2 and c must be nonnegative")
        if self.k1 > self.n:
            raise InvalidParameters("k1 > n")
        if self.k2 > self.n:
            raise InvalidParameters("k2 > n")
        if self.c < self.k1 + self.k2 - self.n:
            raise InvalidParameters("c < k1 + k2 - n")
        if self.c > min(self.k1, self.k2):
            raise InvalidParameters("c > min(k1, k2)")
        _check_distance("dz", self.d_z, self.n)
        _check_distance("dx", self.d_x, self.n)


def _check_q(q: int) -> None:
    if q < 2 or not is_prime_power(q):
        raise InvalidParameters(f"q={q} is not a prime power")


def _check_distance(name: str, d: int, n: int) -> None:
    if d < 1:
        raise InvalidParameters(f"{name} < 1")
    if d - 1 > n:
        raise InvalidParameters(f"{name} - 1 > n")


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


@lru_cache(maxsize=65536)
def ball_sum(n: int, d: int, q: int) -> int:
    """Number of vectors of F_q^n with Hamming weight at most ``d - 1``."""
    total = 0
    for i in range(min(d - 1, n) + 1):
        total += binomial(n, i) * (q - 1) ** i
    return total


def new_lhs_parts(q: int, n: int, ell: int, c: int, d_x: int, d_z: int) -> tuple[int, int]:
    # unchecked; callers validate
    factor = q ** (2 * n - ell) - q ** (ell - 2 * c)
    num = factor * (ball_sum(n, d_x, q) * ball_sum(n, d_z, q) - 1)
    return num, q ** (2 * n) - 1


def old_lhs_parts(q: int, n: int, k1: int, k2: int, c: int, d_z: int, d_x: int) -> tuple[int, int]:
    num = (q ** (n - k1) - q ** (k2 - c)) * (ball_sum(n, d_z, q) - 1)
    num += (q ** (n - k2) - q ** (k1 - c)) * (ball_sum(n, d_x, q) - 1)
    return num, q**n - 1


def check_new(p: BoundParamsNew) -> tuple[bool, ExactRatio]:
    """Decide the symplectic inequality for ``p``; returns ``(satisfied, lhs)``."""
    p.validate()
    num, den = new_lhs_parts(p.q, p.n, p.ell, p.c, p.d_x, p.d_z)
    return num < den, ExactRatio(num, den)


def check_old(p: BoundParamsOld) -> tuple[bool, ExactRatio]:
    """Decide the conventional direct-product inequality for ``p``."""
    p.validate()
    num, den = old_lhs_parts(p.q, p.n, p.k1, p.k2, p.c, p.d_z, p.d_x)
    return num < den, ExactRatio(num, den)
