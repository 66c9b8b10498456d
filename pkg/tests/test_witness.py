import collections

import numpy as np
import pytest
from scipy import stats

from eagv.bounds import BoundParamsNew, InvalidParameters, check_new
from eagv.gf import make_field
from eagv.symplectic import analyze_code, detection_check, rref
from eagv.witness import (
    EXHAUSTIVE,
    RANDOM,
    SearchConfig,
    SearchError,
    gaussian_binomial,
    iter_rref,
    sample_subspace,
    search_witness,
)


def test_gaussian_binomial():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(6, 3, 2) == 1395
    assert gaussian_binomial(4, 0, 3) == 1 == gaussian_binomial(4, 4, 3)


@pytest.mark.parametrize("q, k, N", [(2, 2, 4), (3, 2, 4), (2, 3, 6), (4, 1, 3)])
def test_iter_rref_enumerates_each_subspace_once(q, k, N):
    f = make_field(q)
    mats = list(iter_rref(f, k, N))
    assert len(mats) == gaussian_binomial(N, k, q)
    keys = {tuple(map(tuple, M.tolist())) for M in mats}
    assert len(keys) == len(mats)
    for M in mats[:50]:
        R, piv = rref(f, M)
        assert len(piv) == k and (R == M).all()


def test_sample_subspace_edges():
    f = make_field(3)
    rng = np.random.default_rng(0)
    full = sample_subspace(f, 2, 4, rng)
    assert full.ell == 4 and full.c == 2
    zero = sample_subspace(f, 2, 0, rng)
    assert zero.ell == 0 and zero.c == 0


def test_sample_subspace_uniform():
    f = make_field(2)
    rng = np.random.default_rng(12345)
    counts = collections.Counter(sample_subspace(f, 2, 2, rng).key() for _ in range(10_000))
    assert len(counts) == 35
    mean = 10_000 / 35
    sigma = np.sqrt(10_000 * (1 / 35) * (34 / 35))
    assert all(abs(v - mean) <= 5 * sigma for v in counts.values())
    assert stats.chisquare(list(counts.values())).pvalue > 1e-4


def verify(report, p):
    f = make_field(p.q)
    cs = analyze_code(f, p.n, report.witness)
    assert (cs.ell, cs.c) == (p.ell, p.c)
    assert detection_check(cs, p.d_x, p.d_z).ok


def test_exhaustive_example():
    p = BoundParamsNew(q=2, n=2, ell=2, c=1, d_x=2, d_z=1)
    rep = search_witness(SearchConfig(p, EXHAUSTIVE))
    assert rep.bound_satisfied and rep.found and not rep.contradiction
    verify(rep, p)
    known = analyze_code(make_field(2), 2, [[1, 0, 1, 0], [1, 1, 0, 1]])
    assert detection_check(known, 2, 1).ok


def test_trivial_distances():
    p = BoundParamsNew(q=2, n=2, ell=2, c=1, d_x=1, d_z=1)
    rep = search_witness(SearchConfig(p, RANDOM, trials=100, seed=5))
    assert rep.found
    verify(rep, p)


def test_random_mode_gated_on_bound():
    p = BoundParamsNew(q=2, n=3, ell=2, c=1, d_x=2, d_z=2)
    ok, lhs = check_new(p)
    assert not ok and lhs.numerator == 15 * 15 and lhs.denominator == 63
    rep = search_witness(SearchConfig(p, RANDOM, trials=10_000, seed=1))
    assert rep.bound_satisfied is False
    assert not rep.contradiction
    if rep.found:
        verify(rep, p)


def test_random_deterministic():
    p = BoundParamsNew(q=3, n=3, ell=3, c=1, d_x=2, d_z=1)
    a = search_witness(SearchConfig(p, RANDOM, trials=200, seed=99))
    b = search_witness(SearchConfig(p, RANDOM, trials=200, seed=99))
    assert a.to_dict() == b.to_dict()
    assert a.found
    verify(a, p)


def test_stats_account_for_every_trial():
    p = BoundParamsNew(q=2, n=3, ell=3, c=1, d_x=2, d_z=2)
    rep = search_witness(SearchConfig(p, RANDOM, trials=300, seed=4))
    rejected = rep.stats["wrong_c"] + rep.stats["failed_detection"]
    assert rep.trials_used == rejected + (1 if rep.found else 0)


def test_config_validation():
    p = BoundParamsNew(q=2, n=2, ell=2, c=1, d_x=1, d_z=1)
    with pytest.raises(ValueError):
        search_witness(SearchConfig(p, "bogus"))
    with pytest.raises(ValueError):
        search_witness(SearchConfig(p, RANDOM, trials=0))
    with pytest.raises(SearchError):
        search_witness(SearchConfig(BoundParamsNew(4, 6, 6, 1, 1, 1), EXHAUSTIVE, max_subspaces=1000))
    with pytest.raises(InvalidParameters):
        search_witness(SearchConfig(BoundParamsNew(2, 2, 3, 0, 1, 1)))


def test_contradiction_flag():
    from eagv.witness import WitnessReport
    rep = WitnessReport(False, None, 10, True, EXHAUSTIVE, completed=True)
    assert rep.contradiction
    rep = WitnessReport(False, None, 10, True, RANDOM, completed=True)
    assert not rep.contradiction
