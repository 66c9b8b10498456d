"""Arithmetic in GF(p^m).

Elements are integers in ``[0, q)``. The base-p digits of an element (least
significant first) are the coefficients of its polynomial representative in
the basis ``1, a, ..., a^(m-1)`` where ``a`` is a root of the field modulus.

Scalar operations (:func:`gf_mul`, :func:`gf_inv`) go through explicit
polynomial arithmetic. :class:`Field` additionally carries log/antilog and
digit tables so that whole numpy arrays can be combined elementwise; the
linear algebra in :mod:`eagv.symplectic` runs on that vectorised path.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

MAX_FIELD_ORDER = 2**20


class FieldError(ValueError):
    pass


class NotAPrimePower(FieldError):
    pass


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m`` or raise :class:`NotAPrimePower`."""
    if q < 2:
        raise NotAPrimePower(f"q={q} is not a prime power")
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotAPrimePower(f"q={q} is not a prime power")
    return p, m


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except NotAPrimePower:
        return False
    return True


# --- polynomials over GF(p), coefficient lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim(list(a))
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        coef = r[-1] * inv_lead % p
        quot[shift] = coef
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - coef * bi) % p
        _trim(r)
    return _trim(quot), r


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1..deg // 2``."""
    f = _trim(list(poly))
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            _, r = _poly_divmod(f, divisor, p)
            if not r:
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree m (low coefficients compared first)."""
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


def _int_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True, eq=False)
class Field:
    """The finite field GF(p^m) with a fixed modulus.

    Build instances with :func:`make_field`.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    digits: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __str__(self) -> str:
        return f"GF({self.q})"

    # -- elementwise, numpy-friendly --------------------------------------

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        s = (self.digits[a] + self.digits[b]) % self.p
        return s @ self._place

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg_table[b])

    def mul(self, a, b):
        if self.m == 1:
            return (np.asarray(a) * np.asarray(b)) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        la = self.log[a]
        lb = self.log[b]
        out = self.exp[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in " + str(self))
        return self.exp[(-self.log[a]) % (self.q - 1)]

    @property
    def _place(self) -> np.ndarray:
        return self.p ** np.arange(self.m, dtype=np.int64)


def _poly_of(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return _trim(out)


def _value_of(poly: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(poly):
        v = v * p + c
    return v


def _poly_mulmod(a: int, b: int, p: int, m: int, modulus: Sequence[int]) -> int:
    prod = _poly_mul(_poly_of(a, p, m), _poly_of(b, p, m), p)
    _, r = _poly_divmod(prod, modulus, p)
    return _value_of(r, p)


def make_field(q: int, modulus: Sequence[int] | None = None) -> Field:
    """Construct GF(q).

    Without ``modulus`` the lexicographically smallest monic irreducible
    polynomial is used (``[0, 1]``, i.e. ``x``, for prime fields).
    """
    p, m = factor_prime_power(q)
    if q > MAX_FIELD_ORDER:
        raise FieldError(f"q={q} exceeds the supported field order {MAX_FIELD_ORDER}")
    if modulus is None:
        mod = [0, 1] if m == 1 else smallest_irreducible(p, m)
    else:
        mod = [int(c) % p for c in modulus]
        if len(_trim(list(mod))) != m + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m} for q={q}")
        if not is_irreducible(mod, p):
            raise FieldError("modulus is reducible over GF(%d)" % p)

    digits = np.zeros((q, m), dtype=np.int64)
    vals = np.arange(q, dtype=np.int64)
    for i in range(m):
        digits[:, i] = vals % p
        vals //= p
    neg = (((-digits) % p) @ (p ** np.arange(m, dtype=np.int64))).astype(np.int64)

    exp = np.zeros(q - 1, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    if q > 2:
        gen = _find_generator(p, m, mod)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = _mulmod_fast(x, gen, p, m, mod)
    else:
        exp[0] = 1
    return Field(p=p, m=m, modulus=tuple(mod), exp=exp, log=log, digits=digits, neg_table=neg)


def _mulmod_fast(a: int, b: int, p: int, m: int, modulus: Sequence[int]) -> int:
    if m == 1:
        return a * b % p
    return _poly_mulmod(a, b, p, m, modulus)


def _find_generator(p: int, m: int, modulus: Sequence[int]) -> int:
    q = p**m
    order = q - 1
    cofactors = [order // r for r in _int_factors(order)]
    for g in range(2 if q > 2 else 1, q):
        if all(_pow_elem(g, e, p, m, modulus) != 1 for e in cofactors):
            return g
    raise FieldError("no primitive element found")  # pragma: no cover


def _pow_elem(a: int, e: int, p: int, m: int, modulus: Sequence[int]) -> int:
    result = 1
    while e:
        if e & 1:
            result = _mulmod_fast(result, a, p, m, modulus)
        a = _mulmod_fast(a, a, p, m, modulus)
        e >>= 1
    return result


# --- scalar reference path -------------------------------------------------

def _check_elem(f: Field, *elems: int) -> None:
    for a in elems:
        if not 0 <= a < f.q:
            raise FieldError(f"element {a} out of range for {f}")


def gf_add(f: Field, a: int, b: int) -> int:
    _check_elem(f, a, b)
    out, place = 0, 1
    for _ in range(f.m):
        out += ((a % f.p + b % f.p) % f.p) * place
        a //= f.p
        b //= f.p
        place *= f.p
    return out


def gf_mul(f: Field, a: int, b: int) -> int:
    """Polynomial product of ``a`` and ``b`` reduced modulo the field modulus."""
    _check_elem(f, a, b)
    if f.m == 1:
        return a * b % f.p
    return _poly_mulmod(a, b, f.p, f.m, f.modulus)


def gf_inv(f: Field, a: int) -> int:
    """Multiplicative inverse by the extended Euclidean algorithm on polynomials."""
    _check_elem(f, a)
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in {f}")
    if f.m == 1:
        return pow(a, -1, f.p)
    p = f.p
    r0, r1 = list(f.modulus), _poly_of(a, p, f.m)
    s0, s1 = [], [1]
    while r1:
        quot, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1, p), p)
    # r0 is a nonzero constant because the modulus is irreducible
    scale = pow(r0[0], -1, p)
    return _value_of([c * scale % p for c in s0], p)


def gf_pow(f: Field, a: int, e: int) -> int:
    _check_elem(f, a)
    return _pow_elem(a, e, f.p, f.m, f.modulus)
