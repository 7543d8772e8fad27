"""Gaussian Unitary Ensemble and its traceless version.

GUE matrices have density proportional to ``exp(-tr(H^2)/2)``: the diagonal is
standard normal and the real and imaginary parts of each off-diagonal entry are
normal with variance 1/2. The traceless ensemble GUE0 subtracts
``tr(A)/d`` times the identity.

Eigenvalues are computed by cyclic Jacobi rotations on the real symmetric
``2d x 2d`` embedding ``[[Re H, -Im H], [Im H, Re H]]``, vectorized over a
batch of matrices.
"""

import itertools
import math
from typing import Sequence

import numpy as np
from numpy.polynomial.hermite_e import hermegauss
from scipy.special import erf

from .exceptions import UnsupportedDimensionError
from .streams import RandomStream

HERMITIAN_TOL = 1e-12
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 60


def _check_dim(d: int) -> None:
    if d < 1:
        raise ValueError(f"matrix dimension must be >= 1, got {d}")


def _gue_from_normals(d: int, z: np.ndarray) -> np.ndarray:
    """Build a GUE matrix from ``d*d`` standard normals.

    The first ``d`` variates fill the diagonal; the rest are consumed as
    (real, imaginary) pairs for the upper triangle in row-major order.
    """
    h = np.zeros((d, d), dtype=complex)
    h[np.diag_indices(d)] = z[:d]
    iu = np.triu_indices(d, 1)
    off = (z[d::2] + 1j * z[d + 1::2]) / math.sqrt(2.0)
    h[iu] = off
    h[(iu[1], iu[0])] = off.conj()
    return h


def sample_gue(d: int, rng: RandomStream) -> np.ndarray:
    _check_dim(d)
    return _gue_from_normals(d, rng.normals(d * d))


def sample_gue0(d: int, rng: RandomStream) -> np.ndarray:
    """Traceless GUE draw ``A - tr(A)/d * I``."""
    a = sample_gue(d, rng)
    shift = np.trace(a).real / d
    a[np.diag_indices(d)] -= shift
    return a


def check_hermitian(h: np.ndarray) -> np.ndarray:
    h = np.asarray(h, dtype=complex)
    if h.ndim < 2 or h.shape[-1] != h.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {h.shape}")
    scale = max(1.0, float(np.max(np.abs(h), initial=0.0)))
    asym = float(np.max(np.abs(h - np.conj(np.swapaxes(h, -1, -2))), initial=0.0))
    if asym > HERMITIAN_TOL * scale:
        raise ValueError(f"matrix is not Hermitian (asymmetry {asym:.3g})")
    return h


def jacobi_eigenvalues(s: np.ndarray, tol: float = JACOBI_TOL) -> np.ndarray:
    """Eigenvalues of a batch of real symmetric matrices, shape ``(m, N, N)``.

    Sweeps over all ``(p, q)`` pairs, annihilating each off-diagonal entry,
    until the off-diagonal Frobenius norm of every matrix is below
    ``tol`` times its full Frobenius norm. Returns the (unsorted) diagonals.
    """
    a = np.array(s, dtype=float, copy=True)
    size = a.shape[-1]
    scale = np.sqrt(np.sum(a * a, axis=(1, 2)))
    offmask = ~np.eye(size, dtype=bool)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.sqrt(np.sum(a[:, offmask] ** 2, axis=1))
        if np.all(off <= tol * scale):
            break
        for p, q in itertools.combinations(range(size), 2):
            apq = a[:, p, q]
            active = apq != 0.0
            if not active.any():
                continue
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = (a[:, q, q] - a[:, p, p]) / (2.0 * apq)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(active & np.isfinite(t), t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            sn = t * c
            c_ = c[:, None]
            s_ = sn[:, None]
            colp = a[:, :, p].copy()
            colq = a[:, :, q]
            a[:, :, p] = c_ * colp - s_ * colq
            a[:, :, q] = s_ * colp + c_ * colq
            rowp = a[:, p, :].copy()
            rowq = a[:, q, :]
            a[:, p, :] = c_ * rowp - s_ * rowq
            a[:, q, :] = s_ * rowp + c_ * rowq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.diagonal(a, axis1=1, axis2=2).copy()


def _real_embedding(h: np.ndarray) -> np.ndarray:
    re, im = h.real, h.imag
    top = np.concatenate((re, -im), axis=-1)
    bottom = np.concatenate((im, re), axis=-1)
    return np.concatenate((top, bottom), axis=-2)


def eigenvalues_batch(hs: np.ndarray) -> np.ndarray:
    """Descending spectra of a stack of Hermitian matrices, shape ``(m, d, d)``."""
    hs = check_hermitian(hs)
    if hs.ndim == 2:
        hs = hs[None]
    doubled = np.sort(jacobi_eigenvalues(_real_embedding(hs)), axis=1)[:, ::-1]
    # each eigenvalue of H appears twice in the embedding
    return doubled[:, ::2].copy()


def eigenvalues(h: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    h = check_hermitian(h)
    if h.ndim != 2:
        raise ValueError("eigenvalues expects a single matrix; use eigenvalues_batch")
    return eigenvalues_batch(h[None])[0]


def sample_gue0_spectra(d: int, master_seed: int, indices: Sequence[int]) -> np.ndarray:
    """Spectra of GUE0 draws, one per stream index, shape ``(len(indices), d)``."""
    _check_dim(d)
    mats = np.empty((len(indices), d, d), dtype=complex)
    for row, k in enumerate(indices):
        mats[row] = sample_gue0(d, RandomStream(master_seed, k))
    if len(indices) == 0:
        return np.empty((0, d))
    return eigenvalues_batch(mats)


def gue0_density(x: Sequence[float]) -> float:
    """Unnormalized GUE0 eigenvalue density on the zero-sum hyperplane.

    ``exp(-|x|^2 / 2) * prod_{i<j} (x_i - x_j)^2`` for ordered ``x``.
    """
    x = np.asarray(x, dtype=float)
    if abs(float(np.sum(x))) > 1e-9:
        raise ValueError(f"point is off the zero-sum hyperplane (sum {np.sum(x):.3g})")
    if np.any(np.diff(x) > 0):
        raise ValueError("coordinates must be weakly decreasing")
    vandermonde = 1.0
    for i, j in itertools.combinations(range(len(x)), 2):
        vandermonde *= (x[i] - x[j]) ** 2
    return float(math.exp(-0.5 * float(x @ x)) * vandermonde)


def hyperplane_basis(d: int) -> np.ndarray:
    """Orthonormal basis of ``{x : sum(x) = 0}`` as the columns of a ``d x (d-1)`` array."""
    helmert = np.zeros((d, d - 1))
    for k in range(1, d):
        helmert[:k, k - 1] = 1.0
        helmert[k, k - 1] = -k
        helmert[:, k - 1] /= math.sqrt(k * (k + 1))
    return helmert


def normalization_constant(d: int) -> float:
    """Integral of :func:`gue0_density` over the ordered part of the hyperplane.

    The hyperplane carries its (d-1)-dimensional surface measure. The
    integrand is a polynomial times ``exp(-|u|^2/2)`` in orthonormal
    coordinates, so tensor Gauss-Hermite quadrature with enough nodes is exact;
    the integral over all orderings is divided by ``d!``.
    """
    if not 2 <= d <= 4:
        raise UnsupportedDimensionError(f"normalization_constant supports 2 <= d <= 4, got {d}")
    nodes, weights = hermegauss(d * (d - 1) // 2 + 2)
    basis = hyperplane_basis(d)
    grids = np.meshgrid(*([nodes] * (d - 1)), indexing="ij")
    u = np.stack([g.ravel() for g in grids], axis=1)
    w = np.prod(np.stack(np.meshgrid(*([weights] * (d - 1)), indexing="ij")), axis=0).ravel()
    x = u @ basis.T
    vdm = np.ones(len(x))
    for i, j in itertools.combinations(range(d), 2):
        vdm *= (x[:, i] - x[:, j]) ** 2
    return float(w @ vdm) / math.factorial(d)


def largest_eig_cdf_d2(t):
    """``P(x_1 <= t)`` for the larger eigenvalue of a 2x2 GUE0 matrix.

    Equals ``P(chi2_3 <= 2 t^2)`` for ``t >= 0``.
    """
    t = np.asarray(t, dtype=float)
    tc = np.clip(t, 0.0, 40.0)
    out = erf(tc) - (2.0 / math.sqrt(math.pi)) * tc * np.exp(-tc * tc)
    out = np.where(t <= 0, 0.0, out)
    return out if out.ndim else float(out)


def chi3_cdf(r):
    """CDF of the length of a standard Gaussian vector in three dimensions."""
    return largest_eig_cdf_d2(np.asarray(r, dtype=float) / math.sqrt(2.0))
