"""The Plancherel measure restricted to diagrams with at most ``d`` rows.

A diagram ``lam`` with ``n`` boxes gets probability ``N_lam**2 / C`` where
``N_lam`` counts standard tableaux of shape ``lam`` and ``C`` sums ``N_mu**2``
over all admissible ``mu``. Through RSK this is the shape distribution of a
uniformly random permutation of ``1..n`` with no decreasing subsequence longer
than ``d``.
"""

import csv
import io
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinatorics import (
    Permutation,
    YoungDiagram,
    check_diagram,
    count_partitions,
    det_count,
    format_diagram,
    inverse_rsk,
    lds,
    partitions,
    sample_syt,
)
from .exceptions import ResourceLimitError
from .streams import RandomStream

MAX_TABLE_SIZE = 2_000_000
REJECTION_MAX_N = 12


@dataclass(frozen=True)
class ExactDistribution:
    """Exact restricted Plancherel table for ``(n, d)``.

    ``shapes`` follow :func:`partitions` order; ``counts[i]`` is the number of
    standard tableaux of ``shapes[i]`` and ``total`` the normalizer
    ``sum(count**2)``.
    """

    n: int
    d: int
    shapes: tuple[YoungDiagram, ...]
    counts: tuple[int, ...]
    total: int
    float_cdf: np.ndarray = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.float_cdf is None:
            # each exact partial sum is rounded to float exactly once
            acc = 0
            cdf = np.empty(len(self.counts))
            for i, c in enumerate(self.counts):
                acc += c * c
                cdf[i] = Fraction(acc, self.total)
            cdf.setflags(write=False)
            object.__setattr__(self, "float_cdf", cdf)

    @property
    def probabilities(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c * c, self.total) for c in self.counts)

    @property
    def entries(self) -> list[tuple[YoungDiagram, Fraction]]:
        return list(zip(self.shapes, self.probabilities))

    def probability(self, shape: Sequence[int]) -> Fraction:
        shape = check_diagram(shape)
        try:
            i = self.shapes.index(shape)
        except ValueError:
            return Fraction(0)
        return Fraction(self.counts[i] ** 2, self.total)


def _check_nd(n: int, d: int) -> None:
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")


@lru_cache(maxsize=64)
def exact_distribution(n: int, d: int) -> ExactDistribution:
    _check_nd(n, d)
    size = count_partitions(n, d)
    if size > MAX_TABLE_SIZE:
        raise ResourceLimitError(
            f"exact table for n={n}, d={d} has {size} diagrams (limit {MAX_TABLE_SIZE})"
        )
    shapes = tuple(partitions(n, d))
    counts = tuple(det_count(s, d) for s in shapes)
    return ExactDistribution(n, d, shapes, counts, sum(c * c for c in counts))


def total_count(n: int, d: int) -> int:
    """Number of permutations of ``1..n`` whose longest decreasing run is ``<= d``."""
    return exact_distribution(n, d).total


def sample_diagram(dist: ExactDistribution, rng: RandomStream) -> YoungDiagram:
    """Draw one diagram by inverting the cumulative table with a single uniform."""
    u = rng.uniform()
    cdf = dist.float_cdf
    i = min(bisect_right(cdf, u), len(cdf) - 1)
    return dist.shapes[i]


def sample_permutation(n: int, d: int, rng: RandomStream) -> Permutation:
    """Uniform permutation of ``1..n`` with ``lds <= d``.

    Draws the RSK shape from the exact table, then two independent uniform
    tableaux of that shape, and maps the pair back through inverse RSK.
    """
    _check_nd(n, d)
    shape = sample_diagram(exact_distribution(n, d), rng)
    P = sample_syt(shape, rng)
    Q = sample_syt(shape, rng)
    return inverse_rsk(P, Q)


def rejection_sample_permutation(n: int, d: int, rng: RandomStream) -> Permutation:
    """Same law as :func:`sample_permutation`, by shuffling until ``lds <= d``."""
    _check_nd(n, d)
    if d < n and n > REJECTION_MAX_N:
        raise ResourceLimitError(
            f"rejection sampling is limited to n <= {REJECTION_MAX_N} when d < n"
        )
    while True:
        p = rng.permutation(n)
        if lds(p) <= d:
            return p


@dataclass(frozen=True)
class RescaledRows:
    x: tuple[float, ...]
    y: tuple[float, ...]


def rescale_rows(shape: Sequence[int], n: int, d: int) -> RescaledRows:
    """Center rows at ``n/d`` and scale by ``sqrt(n/d)``.

    ``y_i = (lam_i - n/d) / sqrt(n/d)`` and ``x_i = sqrt(2) * y_i``. Missing
    rows count as zero-length rows.
    """
    shape = check_diagram(shape)
    if sum(shape) != n:
        raise ValueError(f"diagram {shape} has {sum(shape)} boxes, expected {n}")
    if len(shape) > d:
        raise ValueError(f"diagram {shape} has more than d={d} rows")
    if n == 0:
        raise ValueError("rescaling needs n >= 1")
    lam = np.array(list(shape) + [0] * (d - len(shape)), dtype=float)
    c = n / d
    y = (lam - c) / math.sqrt(c)
    x = math.sqrt(2.0 * d / n) * (lam - c)
    return RescaledRows(tuple(x.tolist()), tuple(y.tolist()))


def rescaled_table(dist: ExactDistribution) -> np.ndarray:
    """``x`` coordinates for every diagram in ``dist`` as an ``(m, d)`` array."""
    lam = np.zeros((len(dist.shapes), dist.d))
    for i, s in enumerate(dist.shapes):
        lam[i, : len(s)] = s
    c = dist.n / dist.d
    return math.sqrt(2.0 * dist.d / dist.n) * (lam - c)


def distribution_csv(dist: ExactDistribution) -> str:
    """CSV table with columns ``shape,count,probability,prob_exact``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["shape", "count", "probability", "prob_exact"])
    for shape, count, p in zip(dist.shapes, dist.counts, dist.probabilities):
        writer.writerow(
            [format_diagram(shape), count, format(float(p), ".17g"), str(p)]
        )
    return buf.getvalue()
