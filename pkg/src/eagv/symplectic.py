"""Linear algebra over F_q^{2n} with the symplectic form.

Vectors are length-2n integer arrays ``(x | z)``; a generator matrix H is an
``r x 2n`` array whose left half is H_X and right half H_Z. The form is

    <(a|b), (a'|b')> = a . b' - b . a'

whose Gram matrix on the rows of H is ``H_X H_Z^T - H_Z H_X^T``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable

import numpy as np

from .bounds import ball_sum
from .gf import Field, make_field

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 22


class MatrixError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} candidate vectors, budget is {budget}")
        self.required = required
        self.budget = budget


class DetectionNotCertified(ValueError):
    pass


@dataclass(frozen=True)
class SymplecticVector:
    x: tuple[int, ...]
    z: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.x)

    @classmethod
    def from_concat(cls, v) -> "SymplecticVector":
        v = [int(a) for a in v]
        if len(v) % 2:
            raise MatrixError("symplectic vector needs even length")
        n = len(v) // 2
        return cls(tuple(v[:n]), tuple(v[n:]))

    def concat(self) -> np.ndarray:
        return np.array(self.x + self.z, dtype=np.int64)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.x)) + "|" + ",".join(map(str, self.z)) + ")"


# --- generic GF(q) matrix routines ----------------------------------------

def as_matrix(f: Field, M, cols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1 and A.size == 0:
        A = A.reshape(0, cols or 0)
    if A.ndim != 2:
        raise MatrixError("expected a 2-d matrix")
    if cols is not None and A.shape[1] != cols:
        raise MatrixError(f"expected {cols} columns, got {A.shape[1]}")
    if A.size and (A.min() < 0 or A.max() >= f.q):
        raise MatrixError(f"entries must lie in [0, {f.q})")
    return A


def matmul(f: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise MatrixError(f"shape mismatch {A.shape} x {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = f.add(out, f.mul(A[:, t, None], B[None, t, :]))
    return out


def rref(f: Field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise MatrixError("expected a 2-d matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = f.mul(A[r], f.inv(A[r, col]))
        others = np.nonzero(A[:, col])[0]
        others = others[others != r]
        if others.size:
            A[others] = f.sub(A[others], f.mul(A[others, col][:, None], A[r][None, :]))
        pivots.append(col)
        r += 1
    return A[:r], pivots


def rank_gf(f: Field, M) -> int:
    A = np.asarray(M)
    if A.size == 0:
        return 0
    return len(rref(f, A)[1])


def nullspace(f: Field, M, cols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {v : M v^T = 0}."""
    A = np.asarray(M, dtype=np.int64)
    if A.size == 0:
        width = cols if cols is not None else A.shape[1]
        return np.eye(width, dtype=np.int64)
    R, pivots = rref(f, A)
    width = A.shape[1]
    free = [j for j in range(width) if j not in set(pivots)]
    basis = np.zeros((len(free), width), dtype=np.int64)
    for k, j in enumerate(free):
        basis[k, j] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = f.neg(R[i, j])
    return basis


def reduce_against(f: Field, R: np.ndarray, pivots: list[int], v) -> np.ndarray:
    """Residue of ``v`` after eliminating the pivots of the echelon basis ``R``."""
    w = np.array(v, dtype=np.int64, copy=True)
    for i, pc in enumerate(pivots):
        if w[pc]:
            w = f.sub(w, f.mul(w[pc], R[i]))
    return w


def in_row_space(f: Field, R: np.ndarray, pivots: list[int], v) -> bool:
    return not np.any(reduce_against(f, R, pivots, v))


# --- the symplectic form ----------------------------------------------------

def symp_product(f: Field, u, v) -> int:
    u = np.asarray(u.concat() if isinstance(u, SymplecticVector) else u, dtype=np.int64)
    v = np.asarray(v.concat() if isinstance(v, SymplecticVector) else v, dtype=np.int64)
    if u.shape != v.shape or u.shape[0] % 2:
        raise MatrixError("symplectic product needs equal, even lengths")
    n = u.shape[0] // 2
    xz = matmul(f, u[None, :n], v[None, n:].T)[0, 0]
    zx = matmul(f, u[None, n:], v[None, :n].T)[0, 0]
    return int(f.sub(xz, zx))


def gram_matrix(f: Field, H: np.ndarray) -> np.ndarray:
    """``H_X H_Z^T - H_Z H_X^T``."""
    n = H.shape[1] // 2
    HX, HZ = H[:, :n], H[:, n:]
    return f.sub(matmul(f, HX, HZ.T), matmul(f, HZ, HX.T))


def symplectic_constraints(f: Field, B: np.ndarray) -> np.ndarray:
    """Rows ``(-b_z | b_x)``: ``v`` is orthogonal to every row of ``B`` iff these annihilate ``v``."""
    n = B.shape[1] // 2
    return np.concatenate([f.neg(B[:, n:]), B[:, :n]], axis=1)


@dataclass(frozen=True, eq=False)
class CodeSpace:
    """Row space C of a generator matrix, with the dimensions derived from it."""

    field: Field
    n: int
    H: np.ndarray
    basis: np.ndarray
    pivots: tuple[int, ...]
    ell: int
    c: int
    dim_intersection: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def dual_dim(self) -> int:
        return 2 * self.n - self.ell

    def contains(self, v) -> bool:
        return in_row_space(self.field, self.basis, list(self.pivots), v)

    def key(self) -> tuple:
        """Hashable canonical form; two spaces are equal iff their keys are."""
        return (self.field.q, self.n, tuple(map(tuple, self.basis.tolist())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CodeSpace) and self.field == other.field and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


def analyze_code(field: Field, n: int, H) -> CodeSpace:
    """Compute ell, the entanglement degree c and dim(C cap C^perp_s) for rowspace(H).

    c comes from the Gram-matrix rank on a row basis; the intersection is
    computed separately as ``ell + (2n - ell) - dim(C + C^perp_s)`` and the two
    must satisfy ``2c = ell - dim_intersection``.
    """
    if n < 1:
        raise MatrixError("n must be >= 1")
    A = as_matrix(field, H, 2 * n) if np.asarray(H).size else np.zeros((0, 2 * n), dtype=np.int64)
    if A.shape[0]:
        basis, pivots = rref(field, A)
    else:
        basis, pivots = A, []
    ell = len(pivots)
    gram_rank = rank_gf(field, gram_matrix(field, basis)) if ell else 0
    if gram_rank % 2:
        raise ArithmeticError("odd rank for an alternating Gram matrix")
    dual = nullspace(field, symplectic_constraints(field, basis), 2 * n) if ell else np.eye(2 * n, dtype=np.int64)
    stacked = np.concatenate([basis, dual], axis=0)
    dim_int = ell + dual.shape[0] - rank_gf(field, stacked)
    if dual.shape[0] != 2 * n - ell or ell - dim_int != gram_rank:
        raise ArithmeticError("entanglement-degree identity violated")
    return CodeSpace(field, n, A, basis, tuple(pivots), ell, gram_rank // 2, dim_int)


def symplectic_dual(cs: CodeSpace) -> CodeSpace:
    f = cs.field
    if cs.ell == 0:
        D = np.eye(2 * cs.n, dtype=np.int64)
    else:
        D = nullspace(f, symplectic_constraints(f, cs.basis), 2 * cs.n)
    return analyze_code(f, cs.n, D)


def same_space(a: CodeSpace, b: CodeSpace) -> bool:
    """Row-space equality by mutual membership."""
    return (
        a.ell == b.ell
        and all(b.contains(r) for r in a.basis)
        and all(a.contains(r) for r in b.basis)
    )


# --- error detection --------------------------------------------------------

def weight_class(f: Field, n: int, w: int) -> np.ndarray:
    """All vectors of F_q^n of Hamming weight exactly ``w``, lexicographically sorted."""
    return _weight_class(f.q, n, w)


@lru_cache(maxsize=256)
def _weight_class(q: int, n: int, w: int) -> np.ndarray:
    rows = []
    for support in itertools.combinations(range(n), w):
        for vals in itertools.product(range(1, q), repeat=w):
            v = [0] * n
            for pos, a in zip(support, vals):
                v[pos] = a
            rows.append(v)
    out = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    if len(out) > 1:
        out = out[np.lexsort(out.T[::-1])]
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class DetectionResult:
    ok: bool
    counterexample: SymplecticVector | None = None
    candidates: int = 0


def detection_check(cs: CodeSpace, d_x: int, d_z: int, budget: int = DEFAULT_BUDGET) -> DetectionResult:
    """Check that no ``(v_x|v_z)`` with ``wt(v_x) < d_x`` and ``wt(v_z) < d_z`` lies in C^perp_s minus C.

    Candidates are scanned by total weight, then lexicographically on
    ``(x, z)``; the first offending vector in that order is returned.
    """
    if d_x < 1 or d_z < 1:
        raise ValueError("distances must be >= 1")
    f, n = cs.field, cs.n
    d_x = min(d_x, n + 1)
    d_z = min(d_z, n + 1)
    required = ball_sum(n, d_x, f.q) * ball_sum(n, d_z, f.q)
    if required > budget:
        raise BudgetExceeded(required, budget)

    # v in C^perp_s  <=>  v @ S^T = 0 ;  v in C  <=>  v @ K^T = 0
    S = symplectic_constraints(f, cs.basis) if cs.ell else np.zeros((0, 2 * n), dtype=np.int64)
    K = nullspace(f, cs.basis, 2 * n) if cs.ell else np.eye(2 * n, dtype=np.int64)
    xs = [weight_class(f, n, w) for w in range(d_x)]
    zs = [weight_class(f, n, w) for w in range(d_z)]

    def syndromes(V, Mhalf):
        return matmul(f, V, Mhalf.T)

    for t in range(1, (d_x - 1) + (d_z - 1) + 1):
        best = None
        for wx in range(max(0, t - (d_z - 1)), min(t, d_x - 1) + 1):
            X, Z = xs[wx], zs[t - wx]
            hit = _first_hit(f, X, Z, syndromes(X, S[:, :n]), syndromes(Z, S[:, n:]),
                             syndromes(X, K[:, :n]), syndromes(Z, K[:, n:]))
            if hit is not None:
                vec = tuple(X[hit[0]].tolist()) + tuple(Z[hit[1]].tolist())
                if best is None or vec < best:
                    best = vec
        if best is not None:
            return DetectionResult(False, SymplecticVector.from_concat(best), required)
    return DetectionResult(True, None, required)


def _first_hit(f, X, Z, sx, sz, kx, kz):
    """Least (i, j) with X[i]|Z[j] in the dual but not in C, or None."""
    if len(X) == 0 or len(Z) == 0:
        return None
    width = max(sx.shape[1] + kx.shape[1], 1)
    block = max(1, _CHUNK // (len(Z) * width))
    neg_sz = f.neg(sz)
    neg_kz = f.neg(kz)
    for start in range(0, len(X), block):
        sl = slice(start, start + block)
        in_dual = np.all(sx[sl, None, :] == neg_sz[None, :, :], axis=2)
        in_code = np.all(kx[sl, None, :] == neg_kz[None, :, :], axis=2)
        bad = np.argwhere(in_dual & ~in_code)
        if bad.size:
            i, j = bad[0]
            return start + int(i), int(j)
    return None


@dataclass(frozen=True)
class EaqeccParams:
    n: int
    k: int
    d_x: int
    d_z: int
    c: int
    q: int

    def __str__(self) -> str:
        return f"[[{self.n}, {self.k}, {self.d_x}/{self.d_z}; {self.c}]]_{self.q}"


def eaqecc_params(cs: CodeSpace, d_x: int, d_z: int, budget: int = DEFAULT_BUDGET) -> EaqeccParams:
    res = detection_check(cs, d_x, d_z, budget)
    if not res.ok:
        raise DetectionNotCertified(f"detection fails for d_x={d_x}, d_z={d_z}: {res.counterexample}")
    return EaqeccParams(cs.n, cs.n - cs.ell + cs.c, d_x, d_z, cs.c, cs.q)


# --- matrix file format -----------------------------------------------------

def parse_matrix(text: str) -> tuple[Field, int, np.ndarray]:
    """Parse ``q=<int> n=<int> [poly=c0,c1,...]`` followed by rows of 2n integers."""
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = {}
            for tok in line.split():
                if "=" not in tok:
                    raise MatrixError(f"line {lineno}: bad header token {tok!r}")
                k, v = tok.split("=", 1)
                header[k] = v
            if "q" not in header or "n" not in header:
                raise MatrixError("header must define q and n")
            continue
        try:
            rows.append([int(t) for t in line.split()])
        except ValueError:
            raise MatrixError(f"line {lineno}: non-integer entry") from None
    if header is None:
        raise MatrixError("empty matrix file")
    q, n = int(header["q"]), int(header["n"])
    poly = [int(c) for c in header["poly"].split(",")] if "poly" in header else None
    f = make_field(q, poly)
    for i, r in enumerate(rows):
        if len(r) != 2 * n:
            raise MatrixError(f"row {i + 1} has {len(r)} entries, expected {2 * n}")
    H = np.array(rows, dtype=np.int64).reshape(len(rows), 2 * n)
    return f, n, as_matrix(f, H, 2 * n)


def read_matrix(path) -> tuple[Field, int, np.ndarray]:
    return parse_matrix(Path(path).read_text())


def format_matrix(f: Field, n: int, H: Iterable, comment: str | None = None) -> str:
    head = f"q={f.q} n={n}"
    if f.m > 1:
        head += " poly=" + ",".join(map(str, f.modulus))
    lines = [f"# {comment}"] if comment else []
    lines.append(head)
    lines.extend(" ".join(str(int(a)) for a in row) for row in H)
    return "\n".join(lines) + "\n"


def write_matrix(path, f: Field, n: int, H, comment: str | None = None) -> None:
    Path(path).write_text(format_matrix(f, n, H, comment))
