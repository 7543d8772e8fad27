"""Exact combinatorics of permutations and Young tableaux.

Conventions used throughout the package:

* a permutation is a tuple of the integers ``1..n`` in one-line notation;
* a Young diagram is a tuple of positive, weakly decreasing row lengths
  (the empty diagram ``()`` has size 0);
* a standard tableau is a tuple of rows, each a tuple of labels.

All counts are Python integers, so nothing here ever rounds.
"""

from bisect import bisect_left
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .exceptions import ResourceLimitError

Permutation = tuple[int, ...]
YoungDiagram = tuple[int, ...]
StandardTableau = tuple[tuple[int, ...], ...]

PATH_COUNT_MAX_N = 12


# ---------------------------------------------------------------------------
# validation and parsing


def check_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def check_diagram(shape: Sequence[int]) -> YoungDiagram:
    """Validate a diagram; trailing zero rows are dropped."""
    rows = [int(r) for r in shape]
    while rows and rows[-1] == 0:
        rows.pop()
    if any(r < 1 for r in rows):
        raise ValueError(f"diagram {tuple(shape)} has a non-positive row")
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError(f"diagram {tuple(shape)} is not weakly decreasing")
    return tuple(rows)


def parse_diagram(text: str) -> YoungDiagram:
    """Parse ``"3,1"`` into ``(3, 1)``. An empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse diagram {text!r}") from None
    return check_diagram(parts)


def format_diagram(shape: Sequence[int]) -> str:
    return ",".join(str(r) for r in shape)


def shape_of(tableau: Sequence[Sequence[int]]) -> YoungDiagram:
    return tuple(len(row) for row in tableau)


def is_standard(tableau: Sequence[Sequence[int]]) -> bool:
    rows = [tuple(r) for r in tableau]
    if any(len(r) == 0 for r in rows):
        return False
    shape = tuple(len(r) for r in rows)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        return False
    labels = sorted(v for r in rows for v in r)
    if labels != list(range(1, len(labels) + 1)):
        return False
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if j + 1 < len(row) and row[j + 1] <= v:
                return False
            if i + 1 < len(rows) and j < len(rows[i + 1]) and rows[i + 1][j] <= v:
                return False
    return True


# ---------------------------------------------------------------------------
# permutation statistics


def lis(p: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience sorting)."""
    piles: list[int] = []
    for v in p:
        i = bisect_left(piles, v)
        if i == len(piles):
            piles.append(v)
        else:
            piles[i] = v
    return len(piles)


def lds(p: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence."""
    n = len(p)
    return lis([n + 1 - v for v in p])


# ---------------------------------------------------------------------------
# Robinson-Schensted-Knuth


def rsk(p: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Row-insertion RSK. Returns the insertion tableau P and recording tableau Q."""
    p = check_permutation(p)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, value in enumerate(p, start=1):
        x = value
        for r, row in enumerate(P):
            i = bisect_left(row, x)
            if i == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[i], x = x, row[i]
        else:
            P.append([x])
            Q.append([step])
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def rsk_shape(p: Sequence[int]) -> YoungDiagram:
    return shape_of(rsk(p)[0])


def inverse_rsk(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]]) -> Permutation:
    """The permutation whose row-insertion RSK pair is ``(P, Q)``."""
    if not (is_standard(P) or len(P) == 0) or not (is_standard(Q) or len(Q) == 0):
        raise ValueError("inverse_rsk needs two standard tableaux")
    if shape_of(P) != shape_of(Q):
        raise ValueError(f"shape mismatch: {shape_of(P)} vs {shape_of(Q)}")
    P_rows = [list(r) for r in P]
    where = {label: r for r, row in enumerate(Q) for label in row}
    n = len(where)
    out = [0] * n
    for step in range(n, 0, -1):
        r = where[step]
        # the largest Q label is always at the end of its row
        y = P_rows[r].pop()
        if not P_rows[r]:
            P_rows.pop()
        for rr in range(r - 1, -1, -1):
            row = P_rows[rr]
            i = bisect_left(row, y) - 1
            row[i], y = y, row[i]
        out[step - 1] = y
    return tuple(out)


# ---------------------------------------------------------------------------
# partitions


@lru_cache(maxsize=None)
def _partitions(n: int, d: int, largest: int) -> tuple[YoungDiagram, ...]:
    if n == 0:
        return ((),)
    if d == 0:
        return ()
    out = []
    for first in range(min(n, largest), 0, -1):
        if first * d < n:
            break
        for rest in _partitions(n - first, d - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, d: int) -> list[YoungDiagram]:
    """All partitions of ``n`` into at most ``d`` parts, reverse lexicographic.

    >>> partitions(4, 2)
    [(4,), (3, 1), (2, 2)]
    """
    if n < 0 or d < 1:
        raise ValueError(f"partitions needs n >= 0 and d >= 1, got n={n}, d={d}")
    return list(_partitions(n, d, n))


def count_partitions(n: int, d: int) -> int:
    """Number of partitions of ``n`` into at most ``d`` parts, without listing them."""
    if n < 0 or d < 1:
        raise ValueError(f"count_partitions needs n >= 0 and d >= 1, got n={n}, d={d}")
    # parts of size at most d, by conjugation
    ways = [1] + [0] * n
    for part in range(1, d + 1):
        for m in range(part, n + 1):
            ways[m] += ways[m - part]
    return ways[n]


# ---------------------------------------------------------------------------
# tableau counting


def conjugate(shape: Sequence[int]) -> YoungDiagram:
    if not shape:
        return ()
    return tuple(sum(1 for r in shape if r > j) for j in range(shape[0]))


def hook_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` by the hook-length formula."""
    shape = check_diagram(shape)
    cols = conjugate(shape)
    hooks = prod(
        (row - j - 1) + (cols[j] - i - 1) + 1
        for i, row in enumerate(shape)
        for j in range(row)
    )
    return factorial(sum(shape)) // hooks


def _bareiss_det(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in matrix]
    size = len(a)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if size else 1


def _falling(top: int, count: int) -> int:
    """top * (top - 1) * ... (count factors); 1 when count == 0."""
    return prod(range(top - count + 1, top + 1))


def det_count(shape: Sequence[int], d: int) -> int:
    """Number of standard tableaux via ``n! det[1/(lambda_i - i + j)!]``.

    The determinant is ``d x d`` with missing rows padded by zero and
    ``1/m! = 0`` for ``m < 0``. Row ``i`` is scaled by ``(lambda_i - i + d)!``
    to make it integral before fraction-free elimination.
    """
    shape = check_diagram(shape)
    if len(shape) > d:
        raise ValueError(f"diagram {shape} has more than d={d} rows")
    lam = list(shape) + [0] * (d - len(shape))
    n = sum(lam)
    matrix = []
    scale = 1
    for i in range(1, d + 1):
        top = lam[i - 1] - i + d
        row = []
        for j in range(1, d + 1):
            m = lam[i - 1] - i + j
            # (top)! / m! as a falling factorial; zero when 1/m! vanishes
            row.append(_falling(top, top - m) if m >= 0 else 0)
        matrix.append(row)
        scale *= factorial(top)
    count, rem = divmod(factorial(n) * _bareiss_det(matrix), scale)
    assert rem == 0, "determinant count is not an integer"
    return count


def path_count_oracle(shape: Sequence[int], d: int) -> int:
    """Count non-colliding trajectories of ``d`` particles by brute force.

    Particle ``i`` starts at ``d + 1 - i`` and must end at ``lambda_i + d + 1 - i``;
    at each step exactly one particle moves one unit right and the strict
    ordering ``x_1 > ... > x_d`` must hold throughout.
    """
    shape = check_diagram(shape)
    if len(shape) > d:
        raise ValueError(f"diagram {shape} has more than d={d} rows")
    n = sum(shape)
    if n > PATH_COUNT_MAX_N:
        raise ResourceLimitError(
            f"path_count_oracle is limited to n <= {PATH_COUNT_MAX_N}, got {n}"
        )
    lam = tuple(shape) + (0,) * (d - len(shape))
    start = tuple(d + 1 - i for i in range(1, d + 1))
    end = tuple(start[i] + lam[i] for i in range(d))

    @lru_cache(maxsize=None)
    def ways(pos: tuple[int, ...]) -> int:
        if pos == end:
            return 1
        total = 0
        for i in range(d):
            nxt = pos[i] + 1
            if nxt > end[i]:
                continue
            if i > 0 and nxt >= pos[i - 1]:
                continue
            total += ways(pos[:i] + (nxt,) + pos[i + 1:])
        return total

    return ways(start)


# ---------------------------------------------------------------------------
# uniform standard tableaux


def corners(shape: Sequence[int]) -> list[int]:
    """Rows whose last box can be removed leaving a valid diagram."""
    return [
        i
        for i, row in enumerate(shape)
        if i + 1 == len(shape) or shape[i + 1] < row
    ]


def _remove_box(shape: YoungDiagram, row: int) -> YoungDiagram:
    rows = list(shape)
    rows[row] -= 1
    if rows[row] == 0:
        rows.pop(row)
    return tuple(rows)


@lru_cache(maxsize=4096)
def _corner_cdf(shape: YoungDiagram) -> tuple[tuple[int, ...], tuple[Fraction, ...]]:
    total = hook_count(shape)
    rows = tuple(corners(shape))
    acc = Fraction(0)
    cdf = []
    for r in rows:
        acc += Fraction(hook_count(_remove_box(shape, r)), total)
        cdf.append(acc)
    return rows, tuple(cdf)


def sample_syt(shape: Sequence[int], rng) -> StandardTableau:
    """Uniformly random standard tableau of ``shape``.

    The largest label goes to a corner chosen with probability proportional to
    the number of tableaux of the remaining shape; then recurse.
    """
    shape = check_diagram(shape)
    cells: list[list[int]] = [[0] * r for r in shape]
    current = shape
    for label in range(sum(shape), 0, -1):
        rows, cdf = _corner_cdf(current)
        u = Fraction(rng.uniform())
        k = next(i for i, c in enumerate(cdf) if u < c)
        r = rows[k]
        cells[r][current[r] - 1] = label
        current = _remove_box(current, r)
    return tuple(tuple(row) for row in cells)
