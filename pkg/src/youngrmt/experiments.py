"""Monte Carlo and exact-law experiments behind the command line tool.

Draw ``k`` of a comparison uses stream ``2k`` for the diagram and ``2k + 1``
for the GUE0 matrix. Work is split into contiguous index chunks and merged in
index order, so reports do not depend on the number of worker processes.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

import numpy as np

from . import __version__
from .plancherel import (
    exact_distribution,
    rescaled_table,
    sample_diagram,
    sample_permutation,
)
from .rmt import chi3_cdf, sample_gue0_spectra
from .stats import EmpiricalSample, ks_discrete, ks_two_sample
from .streams import RandomStream

CHUNK = 5000


def diagram_stream(k: int) -> int:
    return 2 * k


def gue_stream(k: int) -> int:
    return 2 * k + 1


def _diagram_chunk(n: int, d: int, seed: int, start: int, stop: int) -> np.ndarray:
    dist = exact_distribution(n, d)
    table = rescaled_table(dist)
    cdf = dist.float_cdf
    u = np.array([RandomStream(seed, diagram_stream(k)).uniform() for k in range(start, stop)])
    idx = np.minimum(np.searchsorted(cdf, u, side="right"), len(cdf) - 1)
    return table[idx]


def _gue_chunk(d: int, seed: int, start: int, stop: int) -> np.ndarray:
    return sample_gue0_spectra(d, seed, [gue_stream(k) for k in range(start, stop)])


def _run_chunks(fn: Callable, args: tuple, samples: int, workers: int) -> np.ndarray:
    bounds = [(s, min(s + CHUNK, samples)) for s in range(0, samples, CHUNK)]
    if workers <= 1 or len(bounds) <= 1:
        parts = [fn(*args, s, e) for s, e in bounds]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, *args, s, e) for s, e in bounds]
            parts = [f.result() for f in futures]
    return np.concatenate(parts, axis=0)


def rescaled_diagram_draws(n: int, d: int, samples: int, seed: int, workers: int = 1) -> np.ndarray:
    """``(samples, d)`` array of rescaled rows of restricted Plancherel diagrams."""
    exact_distribution(n, d)  # validate and warm the cache before forking
    return _run_chunks(_diagram_chunk, (n, d, seed), samples, workers)


def gue0_draws(d: int, samples: int, seed: int, workers: int = 1) -> np.ndarray:
    return _run_chunks(_gue_chunk, (d, seed), samples, workers)


def _moment_rows(x: np.ndarray) -> list[dict]:
    return [
        {
            "coordinate": f"x{i + 1}",
            "mean": math.fsum(x[:, i].tolist()) / len(x),
            "second_moment": math.fsum((x[:, i] ** 2).tolist()) / len(x),
        }
        for i in range(x.shape[1])
    ]


def compare(n: int, d: int, samples: int, seed: int, workers: int = 1) -> dict:
    """Rescaled diagram rows against GUE0 eigenvalues, coordinate by coordinate."""
    if n < 1 or d < 1 or samples < 1:
        raise ValueError("compare needs n, d, samples >= 1")
    diag = rescaled_diagram_draws(n, d, samples, seed, workers)
    gue = gue0_draws(d, samples, seed, workers)
    return {
        "config": {"command": "compare", "n": n, "d": d, "samples": samples, "seed": seed},
        "version": __version__,
        "ks": {
            f"x{i + 1}": ks_two_sample(EmpiricalSample(diag[:, i]), EmpiricalSample(gue[:, i]))
            for i in range(d)
        },
        "moments": {"diagram": _moment_rows(diag), "gue0": _moment_rows(gue)},
    }


def dhw_law(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Support and probabilities of ``sqrt(8/n) (lam_1 - n/2)`` for two-row diagrams."""
    dist = exact_distribution(n, 2)
    first = np.array([s[0] for s in dist.shapes], dtype=float)
    probs = np.array([float(p) for p in dist.probabilities])
    return math.sqrt(8.0 / n) * (first - n / 2.0), probs


def dhw_distance(n: int) -> float:
    """Kolmogorov distance between the exact law of ``sqrt(8/n)(lam_1 - n/2)`` and chi_3."""
    support, probs = dhw_law(n)
    return ks_discrete(support, probs, chi3_cdf)


def dhw(n: int) -> dict:
    if n < 1:
        raise ValueError("dhw needs n >= 1")
    support, probs = dhw_law(n)
    return {
        "config": {"command": "dhw", "n": n, "d": 2},
        "version": __version__,
        "sup_distance": ks_discrete(support, probs, chi3_cdf),
        "support_min": float(support.min()),
        "atoms": int(len(support)),
    }


def sample_rows(kind: str, n: int, d: int, samples: int, seed: int) -> list[tuple]:
    """Draw ``samples`` items of ``kind``; draw ``k`` uses stream ``k``."""
    if kind == "perm":
        return [sample_permutation(n, d, RandomStream(seed, k)) for k in range(samples)]
    if kind == "diagram":
        dist = exact_distribution(n, d)
        return [sample_diagram(dist, RandomStream(seed, k)) for k in range(samples)]
    if kind == "gue0":
        return [tuple(row) for row in sample_gue0_spectra(d, seed, range(samples)).tolist()]
    raise ValueError(f"unknown sample kind {kind!r}")
