"""Operators on a two-factor tensor product space and their partial traces."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatchError
from .linalg import as_matrix, kron, pauli_x, pauli_z


@dataclass(frozen=True)
class BipartiteOperator:
    """Square matrix on an (m*n)-dimensional product space, factor A first.

    The row index decomposes as i*n + a with i the A index and a the B index,
    so the matrix is an m-by-m grid of n-by-n blocks.
    """

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if self.dim_a < 1 or self.dim_b < 1:
            raise ShapeMismatchError("factor dimensions must be positive")
        d = self.dim_a * self.dim_b
        if m.shape != (d, d):
            raise ShapeMismatchError(
                f"matrix shape {m.shape} does not match factors ({self.dim_a}, {self.dim_b})"
            )
        object.__setattr__(self, "matrix", m)

    def block(self, i: int, j: int) -> np.ndarray:
        """The n-by-n block at grid position (i, j)."""
        n = self.dim_b
        return self.matrix[i * n : (i + 1) * n, j * n : (j + 1) * n]


def partial_trace_b(w: BipartiteOperator) -> np.ndarray:
    """Trace out the second factor: entry (i, j) is the trace of block (i, j)."""
    t = w.matrix.reshape(w.dim_a, w.dim_b, w.dim_a, w.dim_b)
    return np.einsum("iaja->ij", t)


def partial_trace_a(w: BipartiteOperator) -> np.ndarray:
    """Trace out the first factor: the sum of the diagonal blocks."""
    t = w.matrix.reshape(w.dim_a, w.dim_b, w.dim_a, w.dim_b)
    return np.einsum("iaib->ab", t)


def twirl_oracle_b(w: BipartiteOperator) -> np.ndarray:
    """Average of conjugations by I (x) X^l Z^j over the full shift/phase family.

    Equals kron(partial_trace_b(w), I_n) exactly, which makes this sum an
    independent cross-check for the block-trace route.
    """
    m, n = w.dim_a, w.dim_b
    x = pauli_x(n)
    z = pauli_z(n)
    eye_a = np.eye(m, dtype=np.complex128)
    xs = [np.linalg.matrix_power(x, l) for l in range(n)]
    zs = [np.linalg.matrix_power(z, j) for j in range(n)]
    acc = np.zeros_like(w.matrix)
    for xl in xs:
        for zj in zs:
            u = kron(eye_a, xl @ zj)
            acc = acc + u @ w.matrix @ u.conj().T
    return acc / n


def dephase_b(w: BipartiteOperator) -> np.ndarray:
    """Phase average alone: keeps only the diagonal of every block."""
    m, n = w.dim_a, w.dim_b
    z = pauli_z(n)
    eye_a = np.eye(m, dtype=np.complex128)
    acc = np.zeros_like(w.matrix)
    for j in range(n):
        u = kron(eye_a, np.linalg.matrix_power(z, j))
        acc = acc + u @ w.matrix @ u.conj().T
    return acc / n


def embed_a(a, n: int) -> BipartiteOperator:
    """Lift an operator on the first factor to A (x) I_n."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatchError("embedded operator must be square")
    if n < 1:
        raise ShapeMismatchError("second factor dimension must be positive")
    return BipartiteOperator(kron(a, np.eye(n)), a.shape[0], n)


def swap_factors(w: BipartiteOperator) -> BipartiteOperator:
    """Exchange the two factors by index permutation."""
    m, n = w.dim_a, w.dim_b
    t = w.matrix.reshape(m, n, m, n).transpose(1, 0, 3, 2).reshape(m * n, m * n)
    return BipartiteOperator(t, n, m)
