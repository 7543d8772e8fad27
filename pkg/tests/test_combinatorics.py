from collections import Counter
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from youngrmt.combinatorics import (
    check_diagram,
    count_partitions,
    det_count,
    hook_count,
    inverse_rsk,
    is_standard,
    lds,
    lis,
    parse_diagram,
    partitions,
    path_count_oracle,
    rsk,
    rsk_shape,
    sample_syt,
)
from youngrmt.exceptions import ResourceLimitError
from youngrmt.streams import RandomStream

from oracles import lds_brute, lis_brute, standard_tableaux_brute


@st.composite
def permutation_strategy(draw, max_n=9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def partition_strategy(draw, max_n=14, max_rows=5):
    n = draw(st.integers(min_value=0, max_value=max_n))
    d = draw(st.integers(min_value=1, max_value=max_rows))
    shapes = partitions(n, d)
    return draw(st.sampled_from(shapes))


@pytest.mark.parametrize("p, expected", [((1, 2, 3, 4), 4), ((3, 1, 2), 2), ((5, 4, 3, 2, 1), 1), ((), 0)])
def test_lis_examples(p, expected):
    assert lis(p) == expected


@pytest.mark.parametrize("p, expected", [((5, 4, 3, 2, 1), 5), ((3, 1, 2), 2), ((1, 2, 3), 1)])
def test_lds_examples(p, expected):
    assert lds(p) == expected


@given(permutation_strategy())
def test_lis_lds_match_exhaustive_search(p):
    assert lis(p) == lis_brute(p)
    assert lds(p) == lds_brute(p)


def test_rsk_examples():
    P, Q = rsk((3, 1, 2))
    assert P == ((1, 2), (3,))
    assert Q == ((1, 3), (2,))
    assert rsk_shape((2, 4, 1, 3)) == (2, 2)
    assert rsk_shape(tuple(range(1, 9))) == (8,)


def test_inverse_rsk_examples():
    assert inverse_rsk(((1, 2), (3,)), ((1, 2), (3,))) == (1, 3, 2)
    row = (tuple(range(1, 7)),)
    assert inverse_rsk(row, row) == tuple(range(1, 7))
    assert inverse_rsk((), ()) == ()


def test_inverse_rsk_rejects_bad_input():
    with pytest.raises(ValueError):
        inverse_rsk(((1, 2), (3,)), ((1, 2, 3),))
    with pytest.raises(ValueError):
        inverse_rsk(((2, 1), (3,)), ((1, 2), (3,)))


@pytest.mark.parametrize("n", range(0, 7))
def test_schensted_and_bijection_exhaustive_small(n):
    seen = set()
    for p in permutations(range(1, n + 1)):
        P, Q = rsk(p)
        assert is_standard(P) or n == 0
        assert is_standard(Q) or n == 0
        shape = tuple(map(len, P))
        assert shape == tuple(map(len, Q))
        assert (shape[0] if shape else 0) == lis(p)
        assert len(shape) == lds(p)
        assert inverse_rsk(P, Q) == p
        seen.add((P, Q))
    assert len(seen) == factorial(n)


def test_partitions_examples():
    assert partitions(4, 2) == [(4,), (3, 1), (2, 2)]
    assert partitions(7, 1) == [(7,)]
    assert partitions(0, 3) == [()]
    with pytest.raises(ValueError):
        partitions(-1, 2)
    with pytest.raises(ValueError):
        partitions(3, 0)


@pytest.mark.parametrize("n, d", [(n, d) for n in range(0, 16) for d in range(1, 6)])
def test_partitions_reverse_lex_and_complete(n, d):
    shapes = partitions(n, d)
    assert shapes == sorted(shapes, reverse=True)
    assert len(set(shapes)) == len(shapes) == count_partitions(n, d)
    for s in shapes:
        assert sum(s) == n and len(s) <= d
        assert check_diagram(s) == s


def test_parse_diagram():
    assert parse_diagram("3,1") == (3, 1)
    assert parse_diagram("") == ()
    for bad in ("1,3", "2,x", "2,-1"):
        with pytest.raises(ValueError):
            parse_diagram(bad)


@pytest.mark.parametrize(
    "shape, expected", [((6,), 1), ((2, 1), 2), ((2, 2), 2), ((3, 1), 3), ((3, 2), 5), ((), 1)]
)
def test_hook_count_examples(shape, expected):
    assert hook_count(shape) == expected


def test_det_count_examples():
    assert det_count((2, 2), 2) == 2
    assert det_count((3, 1), 2) == 3
    assert det_count((9,), 1) == 1
    assert det_count((), 4) == 1
    with pytest.raises(ValueError):
        det_count((1, 1, 1), 2)


def test_path_count_examples():
    assert path_count_oracle((2, 1), 2) == 2
    assert path_count_oracle((5,), 1) == 1
    assert path_count_oracle((2, 2), 2) == 2
    with pytest.raises(ResourceLimitError):
        path_count_oracle((13,), 1)


@pytest.mark.parametrize("shape", [s for n in range(1, 8) for s in partitions(n, n)])
def test_counters_match_enumeration(shape):
    expected = len(standard_tableaux_brute(shape))
    assert hook_count(shape) == expected
    assert det_count(shape, len(shape)) == expected
    assert path_count_oracle(shape, len(shape) + 1) == expected


@settings(max_examples=200)
@given(partition_strategy(max_n=40, max_rows=7), st.integers(min_value=0, max_value=3))
def test_det_count_independent_of_padding(shape, extra):
    d = max(1, len(shape)) + extra
    assert det_count(shape, d) == hook_count(shape)


def test_counts_exceed_64_bits_exactly():
    shape = (10, 9, 8, 7, 6)
    assert hook_count(shape) == det_count(shape, 5) > 2 ** 64


def test_sample_syt_point_mass():
    for k in range(20):
        assert sample_syt((5,), RandomStream(3, k)) == ((1, 2, 3, 4, 5),)


def test_sample_syt_deterministic():
    a = sample_syt((4, 3, 1), RandomStream(11, 4))
    b = sample_syt((4, 3, 1), RandomStream(11, 4))
    assert a == b


@given(partition_strategy(max_n=25, max_rows=6), st.integers(min_value=0, max_value=2**32))
def test_sample_syt_always_standard(shape, seed):
    t = sample_syt(shape, RandomStream(seed, 0))
    assert tuple(map(len, t)) == shape
    assert is_standard(t) or shape == ()


def test_sample_syt_uniform_on_21():
    draws = 100_000
    counts = Counter(sample_syt((2, 1), RandomStream(2024, k)) for k in range(draws))
    assert set(counts) == set(standard_tableaux_brute((2, 1)))
    sigma = (draws * 0.25) ** 0.5
    for c in counts.values():
        assert abs(c - draws / 2) <= 5 * sigma
