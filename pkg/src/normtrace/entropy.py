"""Renyi, Tsallis, and the unified two-parameter entropy of density matrices.

unified_entropy(rho, alpha, s) = ((tr rho^alpha)^s - 1) / ((1 - alpha) s)
with the s -> 0 limit giving Renyi, s = 1 giving Tsallis, and alpha -> 1
giving von Neumann for every s.  Limit routing uses fixed thresholds so the
branch taken is deterministic.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, ExponentRangeError, NotDensityError, NotHermitianError
from .linalg import DEFAULT_TOL, hermitian_eigenvalues

ALPHA_ONE_TOL = 1e-9  # |alpha - 1| below this routes to the von Neumann branch
S_ZERO_TOL = 1e-12  # |s| below this routes to the Renyi branch
EIG_DROP = 1e-14  # eigenvalues at or below this are dropped from sums
DENSITY_EIG_FLOOR = -1e-10


def _check_alpha(alpha: float) -> None:
    if math.isnan(alpha) or math.isinf(alpha) or not alpha > 0:
        raise ExponentRangeError(f"alpha={alpha} must be a positive real")


def density_spectrum(rho, tol: float = 1e-9) -> np.ndarray:
    """Validated eigenvalues of a density matrix, ascending, tiny ones dropped.

    Inputs are never renormalized: a trace away from 1 beyond tol is an error.
    """
    try:
        w = hermitian_eigenvalues(rho, DEFAULT_TOL)
    except NotHermitianError as exc:
        raise NotDensityError("density matrix must be Hermitian") from exc
    if abs(float(w.sum()) - 1.0) > tol:
        raise NotDensityError(f"trace {float(w.sum()):.12g} differs from 1 beyond {tol}")
    if float(w.min()) < DENSITY_EIG_FLOOR:
        raise NotDensityError(f"eigenvalue {float(w.min()):.3e} below {DENSITY_EIG_FLOOR}")
    return w[w > EIG_DROP]


def _vn(w: np.ndarray) -> float:
    return float(-(w * np.log(w)).sum())


def _renyi(w: np.ndarray, alpha: float) -> float:
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        return _vn(w)
    return float(math.log(float(np.sum(w**alpha))) / (1.0 - alpha))


def von_neumann_entropy(rho, tol: float = 1e-9) -> float:
    """-tr(rho ln rho)."""
    return _vn(density_spectrum(rho, tol))


def renyi_entropy(rho, alpha: float, tol: float = 1e-9) -> float:
    """ln(tr rho^alpha) / (1 - alpha); alpha near 1 gives von Neumann."""
    _check_alpha(alpha)
    return _renyi(density_spectrum(rho, tol), alpha)


def tsallis_entropy(rho, alpha: float, tol: float = 1e-9) -> float:
    """(tr rho^alpha - 1) / (1 - alpha); alpha near 1 gives von Neumann."""
    _check_alpha(alpha)
    w = density_spectrum(rho, tol)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        return _vn(w)
    return float((float(np.sum(w**alpha)) - 1.0) / (1.0 - alpha))


def unified_entropy(rho, alpha: float, s: float, tol: float = 1e-9) -> float:
    """((tr rho^alpha)^s - 1) / ((1 - alpha) s) with deterministic limit branches."""
    _check_alpha(alpha)
    if math.isnan(s) or math.isinf(s):
        raise ExponentRangeError(f"s={s} must be a finite real")
    w = density_spectrum(rho, tol)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        return _vn(w)
    if abs(s) < S_ZERO_TOL:
        return _renyi(w, alpha)
    t = float(np.sum(w**alpha))
    return float(math.expm1(s * math.log(t)) / ((1.0 - alpha) * s))


def max_entropy_value(m: int, alpha: float, s: float) -> float:
    """Entropy of the maximally mixed state on dimension m, any (alpha, s)."""
    if int(m) != m or m < 1:
        raise DomainError(f"m={m} must be a positive integer")
    _check_alpha(alpha)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL or abs(s) < S_ZERO_TOL:
        return math.log(m)
    return math.expm1((1.0 - alpha) * s * math.log(m)) / ((1.0 - alpha) * s)


def alpha_log(x: float, alpha: float) -> float:
    """Deformed logarithm (x^(1-alpha) - 1) / (1 - alpha), ln x at alpha near 1."""
    if math.isnan(x) or x <= 0:
        raise DomainError(f"x={x} must be positive")
    _check_alpha(alpha)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        return math.log(x)
    return math.expm1((1.0 - alpha) * math.log(x)) / (1.0 - alpha)
