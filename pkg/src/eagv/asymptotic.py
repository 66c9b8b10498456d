"""Asymptotic form of the symplectic bound via the q-ary entropy function."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .bounds import InvalidParameters

BOUNDARY_TOL = 1e-9
BISECT_TOL = 1e-12
HALF = 0.5 - 1e-12


def entropy_q(x: float, q: int) -> float:
    """-x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument {x} outside [0, 1]")
    if q < 2:
        raise ValueError("q must be >= 2")
    h = 0.0
    for t in (x, 1.0 - x):
        if t > 0.0:
            h -= t * math.log(t)
    return h / math.log(q)


def volume_exponent(delta: float, q: int) -> float:
    """h(delta) + delta log_q(q-1): growth rate of a Hamming ball of radius delta*n."""
    return entropy_q(delta, q) + delta * math.log(q - 1) / math.log(q)


@dataclass(frozen=True)
class AsymptoticParams:
    q: int
    L: float
    lam: float
    delta_x: float
    delta_z: float

    def validate(self) -> None:
        if self.q < 2:
            raise InvalidParameters("q < 2")
        if not 0.0 <= self.L <= 1.0 + self.lam:
            raise InvalidParameters("need 0 <= L <= 1 + lambda")
        if not 0.0 <= self.lam <= self.L / 2:
            raise InvalidParameters("need 0 <= lambda <= L/2")
        for name, d in (("delta_x", self.delta_x), ("delta_z", self.delta_z)):
            if not 0.0 <= d < 0.5:
                raise InvalidParameters(f"need 0 <= {name} < 1/2")

    @property
    def rate(self) -> float:
        return 1.0 - self.L + self.lam


def asymptotic_margin(p: AsymptoticParams) -> float:
    """L minus the left-hand side; positive means feasible."""
    p.validate()
    return p.L - volume_exponent(p.delta_x, p.q) - volume_exponent(p.delta_z, p.q)


def check_asymptotic(p: AsymptoticParams) -> bool:
    return asymptotic_margin(p) > 0.0


def classify_asymptotic(p: AsymptoticParams) -> str:
    m = asymptotic_margin(p)
    if abs(m) <= BOUNDARY_TOL:
        return "boundary"
    return "feasible" if m > 0 else "infeasible"


def max_delta(q: int, L: float, delta_other: float) -> float:
    """Largest delta < 1/2 with volume_exponent(delta) <= L - volume_exponent(delta_other)."""
    if q < 2 or L < 0 or not 0.0 <= delta_other < 0.5:
        raise InvalidParameters("need q >= 2, L >= 0 and 0 <= delta_other < 1/2")
    residual = L - volume_exponent(delta_other, q)
    if residual <= 0.0:
        return 0.0
    if residual >= volume_exponent(0.5, q):
        return HALF
    lo, hi = 0.0, 0.5
    while hi - lo > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if volume_exponent(mid, q) <= residual:
            lo = mid
        else:
            hi = mid
    return lo


def tradeoff_curve(q: int, L: float, points: int = 512) -> list[tuple[float, float]]:
    """``(delta_x, max delta_z)`` on a uniform grid of ``[0, 1/2)``."""
    if points < 1:
        raise ValueError("points must be >= 1")
    return [(i * 0.5 / points, max_delta(q, L, i * 0.5 / points)) for i in range(points)]


def curve_csv(curve) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["delta_x", "delta_z_max"])
    for dx, dz in curve:
        w.writerow([f"{dx:.12g}", f"{dz:.12g}"])
    return buf.getvalue()
