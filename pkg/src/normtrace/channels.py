"""Trace-preserving completely positive maps via isometric dilations.

A channel is held as a single isometry V from the input space into
out (x) env, output index first; the action is Q -> Tr_env(V Q V^dag).
Kraus operators are the environment slices of V.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bipartite import BipartiteOperator, partial_trace_b
from .errors import NotTracePreservingError, ShapeMismatchError
from .linalg import as_matrix, singular_values

ISOMETRY_TOL = 1e-10
CHOI_RANK_TOL = 1e-9


def validate_isometry(v, tol: float = ISOMETRY_TOL) -> bool:
    """True when V^dag V = I within tol * (1 + max|V|^2).  V must be tall."""
    v = as_matrix(v)
    if v.shape[0] < v.shape[1]:
        raise ShapeMismatchError("isometry requires at least as many rows as columns")
    gram = v.conj().T @ v
    scale = 1.0 + float(np.abs(v).max()) ** 2
    return float(np.abs(gram - np.eye(v.shape[1])).max()) <= tol * scale


@dataclass(frozen=True)
class StinespringChannel:
    """Channel Q -> Tr_env(V Q V^dag); rows of V decompose as b*dim_env + c."""

    v: np.ndarray
    dim_in: int
    dim_out: int
    dim_env: int

    def __post_init__(self):
        v = as_matrix(self.v)
        expected = (self.dim_out * self.dim_env, self.dim_in)
        if min(self.dim_in, self.dim_out, self.dim_env) < 1:
            raise ShapeMismatchError("channel dimensions must be positive")
        if v.shape != expected:
            raise ShapeMismatchError(f"dilation shape {v.shape}, expected {expected}")
        if not validate_isometry(v):
            raise NotTracePreservingError("dilation matrix is not an isometry")
        object.__setattr__(self, "v", v)

    def apply(self, q) -> np.ndarray:
        """Channel output Tr_env(V Q V^dag) for a square input on dim_in."""
        q = as_matrix(q)
        if q.shape != (self.dim_in, self.dim_in):
            raise ShapeMismatchError(
                f"input shape {q.shape}, channel expects ({self.dim_in}, {self.dim_in})"
            )
        lifted = self.v @ q @ self.v.conj().T
        return partial_trace_b(BipartiteOperator(lifted, self.dim_out, self.dim_env))

    def kraus_operators(self) -> list[np.ndarray]:
        """Environment slices of V; apply(Q) equals sum_c K_c Q K_c^dag."""
        r = self.v.reshape(self.dim_out, self.dim_env, self.dim_in)
        return [np.ascontiguousarray(r[:, c, :]) for c in range(self.dim_env)]


def kraus_to_stinespring(kraus) -> StinespringChannel:
    """Stack a Kraus family into one isometry, one environment slot each.

    Requires a nonempty list of equal-shape operators with
    sum_c K_c^dag K_c = I on the input space.
    """
    ops = [as_matrix(k) for k in kraus]
    if not ops:
        raise ShapeMismatchError("at least one Kraus operator required")
    n, m = ops[0].shape
    if any(op.shape != (n, m) for op in ops):
        raise ShapeMismatchError("Kraus operators must share one shape")
    d = len(ops)
    v = np.stack(ops, axis=0).transpose(1, 0, 2).reshape(n * d, m)
    return StinespringChannel(v, m, n, d)


def partial_trace_channel(m: int, n: int) -> StinespringChannel:
    """Partial trace over the second factor as a channel from dim m*n to m."""
    if m < 1 or n < 1:
        raise ShapeMismatchError("factor dimensions must be positive")
    return StinespringChannel(np.eye(m * n, dtype=np.complex128), m * n, m, n)


def choi_matrix(ch: StinespringChannel) -> np.ndarray:
    """Block matrix sum_ij Phi(E_ij) (x) E_ij, output factor first."""
    total = np.zeros((ch.dim_out * ch.dim_in,) * 2, dtype=np.complex128)
    for k in ch.kraus_operators():
        w = k.reshape(-1)
        total += np.outer(w, w.conj())
    return total


def choi_rank(ch: StinespringChannel, tol: float = CHOI_RANK_TOL) -> int:
    """Number of Choi eigenvalues above tol relative to the largest."""
    w = np.linalg.eigvalsh(choi_matrix(ch))
    top = float(w.max())
    return int(np.count_nonzero(w > tol * top))


def singular_value_conjugation_check(ch_or_v, q, tol: float = 1e-9) -> bool:
    """Whether V Q V^dag and Q share their nonzero singular values.

    True for every isometry V; accepts either a channel or a raw tall matrix
    so that non-isometric counterexamples can be probed directly.
    """
    if isinstance(ch_or_v, StinespringChannel):
        v = ch_or_v.v
    else:
        v = as_matrix(ch_or_v)
    q = as_matrix(q)
    if q.shape[0] != q.shape[1] or v.shape[1] != q.shape[0]:
        raise ShapeMismatchError(f"incompatible shapes {v.shape} and {q.shape}")
    s_out = singular_values(v @ q @ v.conj().T)
    s_in = singular_values(q)
    smax = max(float(s_out.max()), float(s_in.max()))
    if smax == 0.0:
        return True
    cutoff = tol * smax
    a = s_out[s_out > cutoff]
    b = s_in[s_in > cutoff]
    if a.size != b.size:
        return False
    if a.size == 0:
        return True
    return float(np.abs(a - b).max()) <= tol * smax
