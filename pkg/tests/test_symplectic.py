import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eagv.gf import gf_add, gf_mul, make_field
from eagv.symplectic import (
    BudgetExceeded,
    DetectionNotCertified,
    MatrixError,
    SymplecticVector,
    analyze_code,
    detection_check,
    eaqecc_params,
    format_matrix,
    gram_matrix,
    nullspace,
    parse_matrix,
    rank_gf,
    same_space,
    symp_product,
    symplectic_dual,
)

FIELDS = {q: make_field(q) for q in (2, 3, 4, 5, 7, 8, 9, 16, 25)}


def scalar_symp(f, u, v):
    n = len(u) // 2
    acc = 0
    for i in range(n):
        acc = gf_add(f, acc, gf_mul(f, u[i], v[n + i]))
        acc = gf_add(f, acc, gf_mul(f, f.p - 1, gf_mul(f, u[n + i], v[i])))
    return acc


def span(f, rows, width):
    out = set()
    for coeffs in itertools.product(range(f.q), repeat=len(rows)):
        v = [0] * width
        for a, r in zip(coeffs, rows):
            v = [gf_add(f, x, gf_mul(f, a, int(y))) for x, y in zip(v, r)]
        out.add(tuple(v))
    return out


def test_symp_product_examples():
    f2, f5 = FIELDS[2], FIELDS[5]
    assert symp_product(f2, [1, 0, 0, 0], [0, 0, 1, 0]) == 1
    assert symp_product(f5, [2, 1], [3, 4]) == 0
    u = SymplecticVector((1, 2), (0, 1))
    assert symp_product(FIELDS[3], u, u) == 0
    with pytest.raises(MatrixError):
        symp_product(f2, [1, 0], [1, 0, 0, 0])


vectors = st.sampled_from([2, 3, 4, 5, 9]).flatmap(
    lambda q: st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.just(q),
            *[st.lists(st.integers(0, q - 1), min_size=2 * n, max_size=2 * n) for _ in range(3)],
            st.integers(0, q - 1),
        )
    )
)


@given(vectors)
def test_symp_product_alternating_bilinear(args):
    q, u, v, w, a = args
    f = FIELDS[q]
    assert symp_product(f, u, v) == int(f.neg(symp_product(f, v, u)))
    assert symp_product(f, u, u) == 0
    assert symp_product(f, u, v) == scalar_symp(f, u, v)
    au_w = [int(f.add(f.mul(a, x), y)) for x, y in zip(u, w)]
    lhs = symp_product(f, au_w, v)
    rhs = int(f.add(f.mul(a, symp_product(f, u, v)), symp_product(f, w, v)))
    assert lhs == rhs


def test_rank_examples():
    f2 = FIELDS[2]
    assert rank_gf(FIELDS[7], np.eye(4, dtype=int)) == 4
    assert rank_gf(f2, [[1, 1], [1, 1]]) == 1
    assert rank_gf(f2, [[0, 1], [1, 0]]) == 2


def test_analyze_examples():
    f2 = FIELDS[2]
    cs = analyze_code(f2, 2, [[1, 0, 0, 0], [0, 0, 1, 0]])
    assert (cs.ell, cs.c, cs.dim_intersection) == (2, 1, 0)
    cs = analyze_code(f2, 2, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert (cs.ell, cs.c, cs.dim_intersection) == (2, 0, 2)
    cs = analyze_code(FIELDS[9], 3, [[1, 2, 3, 4, 5, 6]])
    assert cs.c == 0


def test_dependent_rows_do_not_change_c():
    f3 = FIELDS[3]
    H = [[1, 0, 0, 0], [0, 0, 1, 0], [1, 0, 1, 0], [2, 0, 2, 0]]
    cs = analyze_code(f3, 2, H)
    assert (cs.ell, cs.c) == (2, 1)


def test_analyze_rejects_bad_input():
    with pytest.raises(MatrixError):
        analyze_code(FIELDS[2], 2, [[1, 0, 0]])
    with pytest.raises(MatrixError):
        analyze_code(FIELDS[2], 2, [[1, 0, 0, 2]])


def test_dual_examples():
    f2 = FIELDS[2]
    zero = analyze_code(f2, 2, np.zeros((0, 4), dtype=int))
    assert symplectic_dual(zero).ell == 4
    cs = analyze_code(f2, 2, [[1, 0, 0, 0]])
    d = symplectic_dual(cs)
    assert d.ell == 3
    members = span(f2, d.basis.tolist(), 4)
    assert members == {v for v in itertools.product(range(2), repeat=4) if v[2] == 0}


def random_code(rng, q, n, ell=None):
    f = FIELDS[q]
    ell = rng.integers(0, 2 * n + 1) if ell is None else ell
    H = rng.integers(0, q, size=(ell, 2 * n))
    return analyze_code(f, n, H)


def test_dual_is_involution():
    rng = np.random.default_rng(7)
    for _ in range(500):
        q = int(rng.choice([2, 3, 4]))
        n = int(rng.integers(1, 5))
        cs = random_code(rng, q, n)
        dd = symplectic_dual(symplectic_dual(cs))
        assert same_space(cs, dd)
        assert cs == dd


def test_gram_identity_against_brute_force_intersection():
    # dim(C cap C^perp_s) by listing every element of C at tiny sizes
    rng = np.random.default_rng(3)
    for _ in range(60):
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 3))
        cs = random_code(rng, q, n)
        f = FIELDS[q]
        elems = span(f, cs.basis.tolist(), 2 * n) if cs.ell else {(0,) * (2 * n)}
        inter = [v for v in elems if all(scalar_symp(f, v, r) == 0 for r in cs.basis.tolist())]
        assert len(inter) == q**cs.dim_intersection
        assert rank_gf(f, gram_matrix(f, cs.basis)) == 2 * cs.c


def brute_detection(f, n, H, d_x, d_z):
    """Enumerate F_q^{2n} elementwise with scalar arithmetic; return the offending vectors."""
    rows = [list(map(int, r)) for r in H]
    code = span(f, rows, 2 * n) if rows else {(0,) * (2 * n)}
    bad = []
    for v in itertools.product(range(f.q), repeat=2 * n):
        wx = sum(a != 0 for a in v[:n])
        wz = sum(a != 0 for a in v[n:])
        if wx > d_x - 1 or wz > d_z - 1:
            continue
        if all(scalar_symp(f, v, r) == 0 for r in rows) and v not in code:
            bad.append(v)
    return bad


def test_detection_examples():
    f2 = FIELDS[2]
    cs = analyze_code(f2, 2, [[1, 0, 0, 0]])
    res = detection_check(cs, 2, 1)
    assert not res.ok and res.counterexample == SymplecticVector((0, 1), (0, 0))
    cs = analyze_code(f2, 2, [[1, 0, 1, 0], [1, 1, 0, 1]])
    assert cs.c == 1 and detection_check(cs, 2, 1).ok
    for q in (2, 5):
        rng = np.random.default_rng(q)
        assert detection_check(random_code(rng, q, 3), 1, 1).ok


def test_detection_agrees_with_oracle():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 5 if q == 2 else 4))
        cs = random_code(rng, q, n)
        d_x = int(rng.integers(1, n + 2))
        d_z = int(rng.integers(1, n + 2))
        bad = brute_detection(FIELDS[q], n, cs.H, d_x, d_z)
        res = detection_check(cs, d_x, d_z)
        assert res.ok == (not bad)
        if bad:
            first = min(bad, key=lambda v: (sum(a != 0 for a in v), v))
            assert tuple(res.counterexample.concat().tolist()) == first


def test_detection_budget():
    cs = analyze_code(FIELDS[4], 6, [[1] * 12])
    with pytest.raises(BudgetExceeded) as err:
        detection_check(cs, 7, 7, budget=1000)
    assert err.value.required == 4**12


def test_eaqecc_params():
    f2 = FIELDS[2]
    cs = analyze_code(f2, 2, [[1, 0, 1, 0], [1, 1, 0, 1]])
    assert str(eaqecc_params(cs, 2, 1)) == "[[2, 1, 2/1; 1]]_2"
    zero = analyze_code(FIELDS[5], 3, np.zeros((0, 6), dtype=int))
    p = eaqecc_params(zero, 1, 1)
    assert (p.n, p.k, p.c) == (3, 3, 0)
    lagr = analyze_code(f2, 2, [[1, 0, 0, 0], [0, 1, 0, 0]])
    for d in range(1, 4):
        assert eaqecc_params(lagr, d, d).k == 0
    with pytest.raises(DetectionNotCertified):
        eaqecc_params(analyze_code(f2, 2, [[1, 0, 0, 0]]), 2, 1)


def test_matrix_file_roundtrip():
    f9 = FIELDS[9]
    H = np.array([[1, 2, 3, 4, 5, 6], [0, 8, 7, 6, 5, 4]])
    text = format_matrix(f9, 3, H, comment="test")
    f, n, H2 = parse_matrix(text)
    assert f == f9 and n == 3 and (H2 == H).all()
    assert "poly=1,0,1" in text


@pytest.mark.parametrize("text", [
    "",
    "n=2\n1 0 0 0\n",
    "q=2 n=2\n1 0 0\n",
    "q=2 n=2\n1 0 0 x\n",
    "q=2 n=2\n1 0 0 3\n",
    "q=6 n=1\n1 0\n",
])
def test_matrix_file_errors(text):
    with pytest.raises(ValueError):
        parse_matrix(text)


def test_nullspace_annihilates():
    rng = np.random.default_rng(11)
    for q in (3, 4, 8, 25):
        f = FIELDS[q]
        M = rng.integers(0, q, size=(3, 7))
        K = nullspace(f, M)
        assert K.shape[0] == 7 - rank_gf(f, M)
        from eagv.symplectic import matmul
        assert not matmul(f, M, K.T).any()
