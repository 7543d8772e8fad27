import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import stats as sps

from youngrmt.stats import (
    EmpiricalSample,
    chi_square_gof,
    chi_square_two_sample,
    ecdf,
    ks_discrete,
    ks_one_sample,
    ks_two_sample,
    moments,
    pool_cells,
)

finite = st.floats(-1e6, 1e6, allow_nan=False)
samples = st.lists(finite, min_size=1, max_size=60)


def test_sample_sorted_and_nonempty():
    s = EmpiricalSample([3, 1, 2])
    assert list(s.values) == [1, 2, 3] and s.count == 3
    with pytest.raises(ValueError):
        EmpiricalSample([])


def test_ecdf_examples():
    assert ecdf([1, 2, 3], 2) == pytest.approx(2 / 3)
    assert ecdf([1, 2, 3], 0.5) == 0.0
    assert ecdf([1, 2, 3], 7) == 1.0
    assert ecdf([1, 1, 2], 1) == pytest.approx(2 / 3)
    with pytest.raises(ValueError):
        ecdf([], 0.0)


@given(samples, st.lists(finite, min_size=2, max_size=20))
def test_ecdf_monotone_bounded(values, ts):
    ts = sorted(ts)
    f = ecdf(values, np.array(ts))
    assert np.all(np.diff(f) >= 0)
    assert np.all((0 <= f) & (f <= 1))


def test_ks_one_sample_examples():
    assert ks_one_sample([0.0], sps.norm.cdf) == 0.5
    values = [0.0, 1.0, 1.0, 4.0]
    own = lambda t: ecdf(values, t)
    assert ks_one_sample(values, own) == pytest.approx(0.5)  # left limits still differ
    x = np.random.default_rng(1).normal(size=500)
    assert ks_one_sample(x, sps.norm.cdf) == pytest.approx(sps.kstest(x, "norm").statistic, abs=1e-15)


def test_ks_one_sample_against_own_step_function_at_jumps():
    # a continuous cdf that passes through every ECDF jump midpoint sees half a jump
    values = [1.0, 2.0, 3.0, 4.0]
    assert ks_one_sample(values, lambda t: np.clip(np.asarray(t) / 4 - 0.125, 0, 1)) == pytest.approx(0.125)


def test_ks_two_sample_examples():
    assert ks_two_sample([1, 2, 3], [1, 2, 3]) == 0.0
    assert ks_two_sample([0], [1]) == 1.0
    assert ks_two_sample([1, 2], [1, 3]) == 0.5


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
@given(samples, samples)
def test_ks_two_sample_matches_scipy_and_is_symmetric(a, b):
    ours = ks_two_sample(a, b)
    assert ours == ks_two_sample(b, a)
    assert 0 <= ours <= 1
    assert ours == pytest.approx(sps.ks_2samp(a, b).statistic, abs=1e-12)


def test_ks_discrete():
    # two atoms at +-1 against a standard normal
    d = ks_discrete([1.0, -1.0], [0.5, 0.5], sps.norm.cdf)
    assert d == pytest.approx(max(sps.norm.cdf(-1), 0.5 - sps.norm.cdf(-1), sps.norm.sf(1)))
    assert ks_discrete([0.0, 0.0], [0.3, 0.7], sps.norm.cdf) == pytest.approx(0.5)


def test_chi_square_examples():
    assert chi_square_gof([25, 50, 25], [0.25, 0.5, 0.25], 100) == (0.0, 2)
    assert chi_square_gof([60, 40], [0.5, 0.5], 100) == (pytest.approx(4.0), 1)
    with pytest.raises(ValueError):
        chi_square_gof([10], [1.0], 10)
    with pytest.raises(ValueError):
        chi_square_gof([5, 5], [0.4, 0.4], 10)


def test_chi_square_matches_scipy_without_pooling():
    obs = [18, 25, 31, 26]
    probs = [0.2, 0.25, 0.3, 0.25]
    stat, dof = chi_square_gof(obs, probs, 100)
    ref = sps.chisquare(obs, np.array(probs) * 100)
    assert stat == pytest.approx(ref.statistic) and dof == 3


def test_chi_square_pools_sparse_cells():
    assert pool_cells([1, 2, 3, 10, 1]) == [[0, 1, 2], [3, 4]]
    stat, dof = chi_square_gof([1, 2, 3, 90, 4], [0.01, 0.02, 0.03, 0.9, 0.04], 100)
    assert dof == 1
    assert stat == pytest.approx((6 - 6) ** 2 / 6 + (94 - 94) ** 2 / 94)


@given(st.permutations(range(5)))
def test_chi_square_cell_permutation_invariance(order):
    obs = np.array([30, 12, 25, 18, 15])
    probs = np.array([0.28, 0.12, 0.25, 0.2, 0.15])
    base = chi_square_gof(obs, probs, 100)
    perm = chi_square_gof(obs[list(order)], probs[list(order)], 100)
    assert perm[1] == base[1]
    assert perm[0] == pytest.approx(base[0], rel=1e-12)


def test_chi_square_two_sample_matches_contingency():
    a = [120, 340, 540]
    b = [130, 310, 560]
    stat, dof = chi_square_two_sample(a, b)
    ref = sps.chi2_contingency([a, b], correction=False)
    assert stat == pytest.approx(ref[0], rel=1e-12) and dof == ref[2]


def test_moments_examples():
    assert moments([1, 2, 3], 1) == 2
    assert moments([-1, 1], 2) == 1
    assert moments([2], 3) == 8
    with pytest.raises(ValueError):
        moments([1.0], 0)


def test_moments_compensated():
    values = [1e16, 1.0, -1e16, 1.0]
    assert moments(values, 1) == 0.5
    assert math.isclose(moments(np.arange(10.0), 2), np.mean(np.arange(10.0) ** 2))
