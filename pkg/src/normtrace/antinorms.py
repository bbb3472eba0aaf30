"""Symmetric anti-norms on positive semidefinite matrices.

Anti-norms are homogeneous and superadditive rather than subadditive, and
they may vanish on nonzero operators.  All functions validate positive
semidefiniteness and clamp round-off negatives to zero before use.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import (
    ExponentRangeError,
    NotHermitianError,
    NotPsdError,
    RankRangeError,
    ShapeMismatchError,
    SingularPowerError,
)
from .linalg import (
    DEFAULT_TOL,
    PD_FLOOR_COEFF,
    as_matrix,
    hermitian_eigenvalues,
    psd_power,
    require_square,
)


def _psd_spectrum(q, tol: float) -> np.ndarray:
    """Ascending eigenvalues of a PSD matrix, round-off negatives set to zero."""
    try:
        w = hermitian_eigenvalues(q, tol)
    except NotHermitianError as exc:
        raise NotPsdError("matrix is not Hermitian within tolerance") from exc
    spec = float(np.abs(w).max())
    if float(w.min()) < -tol * (1.0 + spec):
        raise NotPsdError("matrix has a negative eigenvalue beyond tolerance")
    return np.where(w < 0.0, 0.0, w)


def _anti_power_sum(values: np.ndarray, p: float) -> float:
    # values nonnegative, p in (0, 1]
    s = float(np.sum(values**p))
    if s == 0.0:
        return 0.0
    return s ** (1.0 / p)


def kyfan_antinorm(q, k: int, tol: float = DEFAULT_TOL) -> float:
    """Sum of the k smallest eigenvalues of a PSD matrix."""
    w = _psd_spectrum(q, tol)
    if not 1 <= k <= w.size:
        raise RankRangeError(f"k={k} outside [1, {w.size}]")
    return float(w[:k].sum())


def kp_antinorm(q, k: int, p: float, tol: float = DEFAULT_TOL, ambient_dim: int | None = None) -> float:
    """(sum of p-th powers of the k smallest eigenvalues)^(1/p) for p in (0, 1].

    ambient_dim > m treats the matrix as embedded in a larger space, padding
    the spectrum with zeros; the padded zeros count among the smallest
    eigenvalues, so the result can vanish on a nonzero operator.
    """
    w = _psd_spectrum(q, tol)
    m = w.size
    amb = m if ambient_dim is None else int(ambient_dim)
    if amb < m:
        raise ShapeMismatchError(f"ambient_dim={amb} smaller than matrix dimension {m}")
    if amb > m:
        w = np.concatenate([np.zeros(amb - m), w])
    if not 1 <= k <= amb:
        raise RankRangeError(f"k={k} outside [1, {amb}]")
    if not 0 < p <= 1:
        raise ExponentRangeError(f"p={p} must lie in (0, 1]")
    return _anti_power_sum(w[:k], p)


def schatten_antinorm(q, p: float, tol: float = DEFAULT_TOL) -> float:
    """(tr Q^p)^(1/p) for p in (0, 1], extended to p < 0 on positive definite Q."""
    if math.isnan(p) or math.isinf(p) or p == 0.0 or p > 1.0:
        raise ExponentRangeError(f"p={p} must lie in (0, 1] or be negative")
    w = _psd_spectrum(q, tol)
    if p < 0:
        spec = float(w[-1])
        if float(w[0]) <= PD_FLOOR_COEFF * (1.0 + spec):
            raise SingularPowerError("negative exponent needs a safely positive definite matrix")
        lo = float(w[0])
        return lo * float(np.sum((w / lo) ** p)) ** (1.0 / p)
    return _anti_power_sum(w, p)


def partial_fidelity(rho, sigma, k: int, tol: float = DEFAULT_TOL) -> float:
    """Sum of the m-k smallest singular values of sqrt(rho) sqrt(sigma).

    Interpolates between 0 at k = m and the full fidelity-type overlap at
    k = 0 (not admitted); computed as a Ky Fan anti-norm of |sqrt(rho) sqrt(sigma)|.
    """
    r = as_matrix(rho)
    s = as_matrix(sigma)
    if r.shape != s.shape:
        raise ShapeMismatchError(f"operands have shapes {r.shape} and {s.shape}")
    m = require_square(r)
    if not 1 <= k <= m:
        raise RankRangeError(f"k={k} outside [1, {m}]")
    if k == m:
        return 0.0
    a = psd_power(r, 0.5, tol) @ psd_power(s, 0.5, tol)
    absval = psd_power(a.conj().T @ a, 0.5, tol)
    return kyfan_antinorm(absval, m - k, tol)
