"""Entropy family: closed forms, limit branches, and validation."""
import math

import numpy as np
import pytest

from normtrace.entropy import (
    alpha_log,
    density_spectrum,
    max_entropy_value,
    renyi_entropy,
    tsallis_entropy,
    unified_entropy,
    von_neumann_entropy,
)
from normtrace.errors import DomainError, ExponentRangeError, NotDensityError


def random_density(rng, n):
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    a = g @ g.conj().T
    return a / np.trace(a).real


def test_von_neumann_diagonal_oracle():
    rho = np.diag([0.5, 0.25, 0.25])
    ref = -(0.5 * math.log(0.5) + 2 * 0.25 * math.log(0.25))
    assert von_neumann_entropy(rho) == pytest.approx(ref, rel=1e-13)


def test_pure_state_entropies_vanish():
    rho = np.zeros((3, 3), dtype=complex)
    rho[0, 0] = 1.0
    assert von_neumann_entropy(rho) == pytest.approx(0.0, abs=1e-12)
    assert renyi_entropy(rho, 2.0) == pytest.approx(0.0, abs=1e-12)
    assert tsallis_entropy(rho, 0.5) == pytest.approx(0.0, abs=1e-12)
    assert unified_entropy(rho, 2.0, 1.5) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("alpha", [0.3, 0.7, 1.5, 3.0])
def test_renyi_diagonal_oracle(alpha):
    w = np.array([0.1, 0.2, 0.3, 0.4])
    rho = np.diag(w)
    ref = math.log(float(np.sum(w**alpha))) / (1.0 - alpha)
    assert renyi_entropy(rho, alpha) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("alpha", [0.3, 0.7, 1.5, 3.0])
def test_tsallis_diagonal_oracle(alpha):
    w = np.array([0.1, 0.2, 0.3, 0.4])
    rho = np.diag(w)
    ref = (float(np.sum(w**alpha)) - 1.0) / (1.0 - alpha)
    assert tsallis_entropy(rho, alpha) == pytest.approx(ref, rel=1e-12)


def test_unified_reduces_to_named_families():
    rng = np.random.default_rng(3)
    rho = random_density(rng, 4)
    for alpha in (0.5, 2.0):
        assert unified_entropy(rho, alpha, 1.0) == pytest.approx(
            tsallis_entropy(rho, alpha), rel=1e-12
        )
        assert unified_entropy(rho, alpha, 0.0) == pytest.approx(
            renyi_entropy(rho, alpha), rel=1e-12
        )
    assert unified_entropy(rho, 1.0, 0.7) == pytest.approx(von_neumann_entropy(rho), rel=1e-12)


def test_unified_general_formula():
    w = np.array([0.6, 0.3, 0.1])
    rho = np.diag(w)
    alpha, s = 2.0, -1.0
    t = float(np.sum(w**alpha))
    ref = (t**s - 1.0) / ((1.0 - alpha) * s)
    assert unified_entropy(rho, alpha, s) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("m", [2, 3, 4, 6])
@pytest.mark.parametrize("alpha", [0.3, 0.7, 1.0, 1.5, 3.0])
@pytest.mark.parametrize("s", [-1.0, 0.0, 0.5, 1.0, 2.0])
def test_maximally_mixed_attains_max_entropy(m, alpha, s):
    rho = np.eye(m) / m
    assert unified_entropy(rho, alpha, s) == pytest.approx(
        max_entropy_value(m, alpha, s), abs=1e-12
    )


def test_limit_continuity_near_branches():
    rng = np.random.default_rng(10)
    for _ in range(10):
        rho = random_density(rng, 3)
        vn = von_neumann_entropy(rho)
        assert abs(renyi_entropy(rho, 1.0 + 1e-4) - vn) <= 1e-3
        assert abs(renyi_entropy(rho, 1.0 - 1e-4) - vn) <= 1e-3
        for alpha in (0.5, 2.0):
            r = renyi_entropy(rho, alpha)
            assert abs(unified_entropy(rho, alpha, 1e-6) - r) <= 1e-5
            assert abs(unified_entropy(rho, alpha, -1e-6) - r) <= 1e-5


def test_density_validation():
    with pytest.raises(NotDensityError):
        density_spectrum(np.diag([0.7, 0.7]))
    with pytest.raises(NotDensityError):
        density_spectrum(np.diag([1.5, -0.5]))
    with pytest.raises(NotDensityError):
        density_spectrum(np.array([[0.5, 0.5], [0.0, 0.5]]))
    w = density_spectrum(np.diag([0.25, 0.75]))
    assert np.allclose(np.sort(w), [0.25, 0.75])


def test_alpha_negative_or_zero_rejected():
    rho = np.eye(2) / 2
    for alpha in (0.0, -1.0, np.nan):
        with pytest.raises(ExponentRangeError):
            renyi_entropy(rho, alpha)
    with pytest.raises(ExponentRangeError):
        unified_entropy(rho, 0.0, 1.0)
    with pytest.raises(ExponentRangeError):
        unified_entropy(rho, 2.0, np.inf)


def test_max_entropy_value_forms():
    assert max_entropy_value(4, 1.0, 2.0) == pytest.approx(math.log(4))
    assert max_entropy_value(4, 2.0, 0.0) == pytest.approx(math.log(4))
    m, alpha, s = 3, 2.0, 1.5
    ref = (m ** ((1.0 - alpha) * s) - 1.0) / ((1.0 - alpha) * s)
    assert max_entropy_value(m, alpha, s) == pytest.approx(ref, rel=1e-13)
    with pytest.raises(DomainError):
        max_entropy_value(0, 2.0, 1.0)


def test_alpha_log_values():
    assert alpha_log(math.e, 1.0) == pytest.approx(1.0)
    x, alpha = 3.0, 0.5
    ref = (x ** (1.0 - alpha) - 1.0) / (1.0 - alpha)
    assert alpha_log(x, alpha) == pytest.approx(ref, rel=1e-13)
    with pytest.raises(DomainError):
        alpha_log(0.0, 2.0)


def test_tiny_eigenvalues_are_dropped():
    # spectrum entries at or below the drop threshold must not poison logs
    rho = np.diag([1.0 - 1e-15, 1e-15])
    assert np.isfinite(von_neumann_entropy(rho))
    assert np.isfinite(renyi_entropy(rho, 0.5))
