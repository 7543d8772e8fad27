"""Local limit theorem for rescaled Poisson probabilities, checked numerically.

For a Poisson parameter ``c`` (``n/d`` in the diagram problem) the grid point
``k`` sits at ``y_k = (k - c) / sqrt(c)`` and the step is ``h = 1/sqrt(c)``.
``f_n`` is the step function equal to ``sqrt(c) * P(Poisson(c) = k)`` on
``[y_k, y_{k+1})``; ``g_n`` equals ``y_{k+1}`` there. Iterated forward
differences of ``f_n`` approach derivatives of the standard normal density.
"""

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
SNAP = 1e-9

# frozen envelope constants for |Delta^a f_n(y)| <= K_a (1 + y^2)^a e^{-|y|}
DOMINANCE_CONSTANTS = {0: 1.0, 1: 4.0, 2: 16.0, 3: 64.0}

GridFunction = Callable[[float, "DiscretizationParams"], float]


@dataclass(frozen=True)
class DiscretizationParams:
    c: float

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError(f"Poisson parameter must be positive, got {self.c}")

    @property
    def step(self) -> float:
        return 1.0 / math.sqrt(self.c)

    def grid_point(self, k: int) -> float:
        return (k - self.c) / math.sqrt(self.c)

    def locate(self, y: float) -> int:
        """Index ``k`` of the grid interval containing ``y``.

        Positions within ``SNAP`` below an integer are snapped up so that grid
        points computed in floating point land in their own interval.
        """
        pos = y * math.sqrt(self.c) + self.c
        k = math.floor(pos)
        if pos - k > 1.0 - SNAP:
            k += 1
        return k


def _log1pmx_scaled(x: float) -> float:
    """``(1 + x) log(1 + x) - x`` without cancellation for small ``x``."""
    if abs(x) < 0.3:
        # sum_{j>=2} (-1)^j x^j / (j (j - 1))
        total = 0.0
        term = -x
        for j in range(2, 80):
            term *= -x
            piece = term / (j * (j - 1))
            total += piece
            if abs(piece) <= 1e-18 * abs(total):
                break
        return total
    return (1.0 + x) * math.log1p(x) - x


def _stirling_tail(k: int) -> float:
    """``log k! - [(k + 1/2) log k - k + log sqrt(2 pi)]`` for ``k >= 10``."""
    k2 = float(k) * k
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / (1680.0 * k2)) / k2) / k2) / k


def log_poisson_density(k: int, c: float) -> float:
    """``log(sqrt(c) * c^k e^{-c} / k!)`` for integer ``k >= 0``.

    For ``k >= 10`` the Stirling series is used with the large terms combined
    analytically, which keeps the absolute error near machine epsilon even
    when ``k`` and ``c`` are of order 1e4.
    """
    if k < 10:
        return 0.5 * math.log(c) + k * math.log(c) - c - math.lgamma(k + 1)
    x = (k - c) / c
    # k log c - c - (k + 1/2) log k + k + 1/2 log c
    #   = -c[(1+x)log(1+x) - x] - 1/2 log(1+x)
    return -c * _log1pmx_scaled(x) - 0.5 * math.log1p(x) - LOG_SQRT_2PI - _stirling_tail(k)


def f_n_at(k: int, params: DiscretizationParams) -> float:
    """Value of ``f_n`` on grid interval ``k``."""
    if k < 0:
        return 0.0
    return math.exp(log_poisson_density(k, params.c))


def g_n_at(k: int, params: DiscretizationParams) -> float:
    return (k + 1 - params.c) / math.sqrt(params.c)


def f_n(y: float, params: DiscretizationParams) -> float:
    """Rescaled Poisson probability, constant on each grid interval."""
    return f_n_at(params.locate(y), params)


def g_n(y: float, params: DiscretizationParams) -> float:
    return g_n_at(params.locate(y), params)


def shift(f: GridFunction, power: int = 1) -> GridFunction:
    """``S^power f``: evaluate ``f`` at ``y + power * h``."""

    def shifted(y, params):
        return f(y + power * params.step, params)

    return shifted


def iterated_difference(f: GridFunction, alpha: int, y: float, params: DiscretizationParams) -> float:
    """``alpha``-fold forward difference of ``f`` at ``y`` with step ``h``.

    Builds the difference table from ``f(y), f(y + h), ..., f(y + alpha h)``
    left to right, dividing by ``h`` at every level.
    """
    if alpha < 0:
        raise ValueError(f"difference order must be >= 0, got {alpha}")
    h = params.step
    values = [f(y + j * h, params) for j in range(alpha + 1)]
    for _ in range(alpha):
        values = [(b - a) / h for a, b in zip(values, values[1:])]
    return values[0]


def difference(f: GridFunction) -> GridFunction:
    """``Delta f`` as a new grid function."""

    def diff(y, params):
        return iterated_difference(f, 1, y, params)

    return diff


def hermite_factor(alpha: int) -> np.ndarray:
    """Coefficients (low to high) of ``p_alpha`` with ``(e^{-z^2/2})^{(alpha)} = p_alpha e^{-z^2/2}``."""
    p = np.array([1.0])
    for _ in range(alpha):
        deriv = p[1:] * np.arange(1, len(p))
        shifted = np.concatenate(([0.0], p))
        nxt = -shifted
        nxt[: len(deriv)] += deriv
        p = nxt
    return p


def gaussian_derivative(alpha: int, y):
    """``alpha``-th derivative of the standard normal density."""
    if alpha < 0:
        raise ValueError(f"derivative order must be >= 0, got {alpha}")
    y = np.asarray(y, dtype=float)
    poly = np.polynomial.polynomial.polyval(y, hermite_factor(alpha))
    out = poly * np.exp(-0.5 * y * y) / math.sqrt(2.0 * math.pi)
    return out if out.ndim else float(out)


def dominance_envelope(alpha: int, y):
    y = np.asarray(y, dtype=float)
    return DOMINANCE_CONSTANTS[alpha] * (1.0 + y * y) ** alpha * np.exp(-np.abs(y))


@dataclass(frozen=True)
class ConvergenceRow:
    c: float
    alpha: int
    sup_error: float
    dominance_ok: bool


def difference_profile(alpha: int, ys: Iterable[float], params: DiscretizationParams) -> np.ndarray:
    return np.array([iterated_difference(f_n, alpha, y, params) for y in ys])


def lemma_report(
    c_values: Sequence[float],
    alphas: Sequence[int],
    grid: Sequence[float],
    dominance_grid: Sequence[float] | None = None,
) -> list[ConvergenceRow]:
    """Sup-norm convergence error and dominance check for every ``(c, alpha)``.

    ``grid`` is where ``|Delta^alpha f_n - phi^(alpha)|`` is maximized; the
    envelope is checked on ``dominance_grid`` (default: ``[-8, 8]`` in steps
    of 0.01).
    """
    grid = np.asarray(list(grid), dtype=float)
    if dominance_grid is None:
        dominance_grid = np.linspace(-8.0, 8.0, 1601)
    dominance_grid = np.asarray(list(dominance_grid), dtype=float)
    rows = []
    for c in c_values:
        params = DiscretizationParams(float(c))
        for alpha in alphas:
            if alpha not in DOMINANCE_CONSTANTS:
                raise ValueError(f"difference orders up to 3 are supported, got {alpha}")
            approx = difference_profile(alpha, grid, params)
            err = float(np.max(np.abs(approx - gaussian_derivative(alpha, grid))))
            dom = difference_profile(alpha, dominance_grid, params)
            ok = bool(np.all(np.abs(dom) <= dominance_envelope(alpha, dominance_grid)))
            rows.append(ConvergenceRow(float(c), int(alpha), err, ok))
    return rows
