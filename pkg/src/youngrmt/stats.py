"""Distribution comparison: ECDFs, Kolmogorov-Smirnov distances, chi-square, moments.

Only statistics are computed here; thresholds live with the callers.
"""

import math
from typing import Callable, Sequence

import numpy as np

MIN_EXPECTED = 5.0


class EmpiricalSample:
    """A sorted, immutable sample of real values."""

    def __init__(self, values: Sequence[float]):
        arr = np.sort(np.asarray(values, dtype=float).ravel())
        if arr.size == 0:
            raise ValueError("empirical sample must be nonempty")
        arr.setflags(write=False)
        self.values = arr

    @property
    def count(self) -> int:
        return int(self.values.size)

    def __len__(self):
        return self.count

    def __repr__(self):
        return f"EmpiricalSample(count={self.count})"


def _as_sample(sample) -> EmpiricalSample:
    return sample if isinstance(sample, EmpiricalSample) else EmpiricalSample(sample)


def ecdf(sample, t):
    """Fraction of sample values ``<= t`` (vectorized over ``t``)."""
    s = _as_sample(sample)
    out = np.searchsorted(s.values, t, side="right") / s.count
    return out if np.ndim(out) else float(out)


def ks_one_sample(sample, cdf: Callable) -> float:
    """Kolmogorov-Smirnov distance between the sample ECDF and ``cdf``.

    At each distinct value both the ECDF value and its left limit are compared
    with ``cdf`` there.
    """
    s = _as_sample(sample)
    xs, first = np.unique(s.values, return_index=True)
    upper = np.searchsorted(s.values, xs, side="right") / s.count
    lower = first / s.count
    f = np.asarray(cdf(xs), dtype=float)
    return float(max(np.max(np.abs(upper - f)), np.max(np.abs(lower - f))))


def ks_two_sample(a, b) -> float:
    """Sup over the pooled values of ``|F_a - F_b|``."""
    a = _as_sample(a)
    b = _as_sample(b)
    pooled = np.concatenate((a.values, b.values))
    return float(np.max(np.abs(ecdf(a, pooled) - ecdf(b, pooled))))


def ks_discrete(support: Sequence[float], probs: Sequence[float], cdf: Callable) -> float:
    """Kolmogorov-Smirnov distance between a finite distribution and ``cdf``.

    ``support`` need not be sorted or distinct; masses on equal points are merged.
    """
    support = np.asarray(support, dtype=float)
    probs = np.asarray(probs, dtype=float)
    xs, inverse = np.unique(support, return_inverse=True)
    mass = np.bincount(inverse, weights=probs)
    upper = np.cumsum(mass)
    lower = upper - mass
    f = np.asarray(cdf(xs), dtype=float)
    return float(max(np.max(np.abs(upper - f)), np.max(np.abs(lower - f))))


def pool_cells(expected_counts: Sequence[float], min_expected: float = MIN_EXPECTED) -> list[list[int]]:
    """Group adjacent cells left to right until each group reaches ``min_expected``.

    A short final group is merged into the one before it.
    """
    groups: list[list[int]] = []
    current: list[int] = []
    acc = 0.0
    for i, e in enumerate(expected_counts):
        current.append(i)
        acc += e
        if acc >= min_expected:
            groups.append(current)
            current, acc = [], 0.0
    if current:
        if groups:
            groups[-1].extend(current)
        else:
            groups.append(current)
    return groups


def chi_square_gof(observed: Sequence[int], expected: Sequence[float], total: int) -> tuple[float, int]:
    """Pearson statistic of ``observed`` counts against cell probabilities.

    Returns ``(statistic, dof)`` with ``dof = cells - 1`` after pooling cells
    whose expected count is below 5.
    """
    observed = np.asarray(observed, dtype=float)
    expected = np.asarray(expected, dtype=float)
    if observed.shape != expected.shape or observed.size < 2:
        raise ValueError("need at least two cells with matching observed/expected lengths")
    if total <= 0 or abs(observed.sum() - total) > 0.5:
        raise ValueError(f"observed counts sum to {observed.sum()}, expected total {total}")
    if np.any(expected < 0) or abs(expected.sum() - 1.0) > 1e-9:
        raise ValueError("expected probabilities must be nonnegative and sum to 1")
    groups = pool_cells(expected * total)
    if len(groups) < 2:
        raise ValueError("fewer than two cells remain after pooling")
    obs = np.array([observed[g].sum() for g in groups])
    exp = np.array([expected[g].sum() for g in groups]) * total
    return float(np.sum((obs - exp) ** 2 / exp)), len(groups) - 1


def chi_square_two_sample(a: Sequence[int], b: Sequence[int]) -> tuple[float, int]:
    """Pearson homogeneity statistic for two count vectors over the same cells.

    Cells are pooled by the pooled expected count of the smaller sample.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.size < 2:
        raise ValueError("need two count vectors of equal length >= 2")
    na, nb = a.sum(), b.sum()
    if na <= 0 or nb <= 0:
        raise ValueError("both samples must be nonempty")
    share = (a + b) / (na + nb)
    groups = pool_cells(share * min(na, nb))
    if len(groups) < 2:
        raise ValueError("fewer than two cells remain after pooling")
    ga = np.array([a[g].sum() for g in groups])
    gb = np.array([b[g].sum() for g in groups])
    p = (ga + gb) / (na + nb)
    stat = np.sum((ga - na * p) ** 2 / (na * p)) + np.sum((gb - nb * p) ** 2 / (nb * p))
    return float(stat), len(groups) - 1


def moments(sample, k: int) -> float:
    """``k``-th raw moment with compensated (``math.fsum``) summation."""
    if k < 1:
        raise ValueError(f"moment order must be >= 1, got {k}")
    s = _as_sample(sample)
    return math.fsum((s.values ** k).tolist()) / s.count
