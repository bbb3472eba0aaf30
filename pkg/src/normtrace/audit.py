"""Seeded samplers, the inequality registry, and the reproducible audit runner.

Each registry case binds one proved relation to an evaluator returning a
signed margin normalized by max(1, |lhs|, |rhs|); margin >= -tolerance means
the relation held on that instance.  The SAT-WRQA case instead returns the
negated equality residual of the product family c * R (x) I, so its margins
sit at zero up to round-off.

Samplers draw from numpy's PCG64 generator and are bit-reproducible per
(kind, dims, seed); the audit derives per-trial seeds by hashing
(base_seed, case id, trial index), so reports are deterministic in the
configuration alone.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ._version import __version__
from . import jsonio
from .antinorms import kp_antinorm, kyfan_antinorm, schatten_antinorm
from .bipartite import BipartiteOperator, partial_trace_b
from .channels import StinespringChannel, choi_rank, partial_trace_channel
from .entropy import alpha_log, max_entropy_value, renyi_entropy, tsallis_entropy, unified_entropy
from .errors import BadDimsError, KindMismatchError, PreconditionError
from .linalg import kron, singular_values
from .norms import gauge_kp, kp_norm, kyfan_norm, schatten_norm

NORM_P_GRID = (1.0, 1.5, 2.0, 3.0, 10.0, math.inf)
ANTINORM_P_GRID = (0.25, 0.5, 0.75, 1.0)
NEGATIVE_P_GRID = (-0.5, -1.0, -2.0)
PQ_GRID = tuple((p, q) for p in (1.0, 1.5, 2.0) for q in (1.5, 2.0, 3.0))
SUBUNIT_PQ_GRID = tuple((p, q) for p in (0.25, 0.5, 0.75) for q in (0.25, 0.5, 0.75))
ALPHA_GRID = (0.3, 0.7, 1.0, 1.5, 3.0)
S_GRID = (-1.0, 0.0, 0.5, 1.0, 2.0)
DEFAULT_DIMS = ((2, 2), (2, 3), (3, 2), (4, 3))

PRNG_INFO = {
    "bit_generator": "PCG64 via numpy.random.default_rng",
    "gaussian_sampler": "numpy Generator.standard_normal",
    "seed_derivation": "first 8 bytes of sha256('<base_seed>:<case_id>:<trial>'), big-endian",
}


# ---------------------------------------------------------------------------
# samplers


def _ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    re = rng.standard_normal((rows, cols))
    im = rng.standard_normal((rows, cols))
    return (re + 1j * im) / math.sqrt(2.0)


def _psd(rng: np.random.Generator, n: int) -> np.ndarray:
    g = _ginibre(rng, n, n)
    return g @ g.conj().T


def _pd(rng: np.random.Generator, n: int) -> np.ndarray:
    a = _psd(rng, n)
    # floor at one tenth of the mean eigenvalue keeps negative powers stable
    return a + 0.1 * (float(a.trace().real) / n) * np.eye(n)


def _density(rng: np.random.Generator, n: int) -> np.ndarray:
    a = _psd(rng, n)
    return a / float(a.trace().real)


def _isometry(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    q, r = np.linalg.qr(_ginibre(rng, rows, cols))
    ph = np.diag(r).copy()
    ph /= np.abs(ph)
    return q * ph


def _ginibre_square(rng: np.random.Generator, m: int) -> np.ndarray:
    return _ginibre(rng, m, m)


def _channel(rng: np.random.Generator, m: int, n: int, d: int) -> StinespringChannel:
    if n * d < m:
        raise BadDimsError(f"no isometry from dimension {m} into {n}*{d}")
    return StinespringChannel(_isometry(rng, n * d, m), m, n, d)


def _dims_tuple(dims) -> tuple[int, ...]:
    if isinstance(dims, (int, np.integer)):
        t = (int(dims),)
    else:
        t = tuple(int(x) for x in dims)
    if not t or any(x < 1 for x in t):
        raise BadDimsError(f"dimensions must be positive, got {dims!r}")
    return t


def sample(kind: str, dims, seed: int):
    """Deterministic random instance; bit-identical per (kind, dims, seed).

    Kinds and their dims: ginibre (rows, cols); psd/pd/density/unitary m;
    bipartite/bipartite_psd/bipartite_pd/bipartite_density (m, n);
    channel (m, n, d) with n*d >= m.
    """
    rng = np.random.default_rng(seed)
    t = _dims_tuple(dims)
    if kind == "ginibre":
        if len(t) != 2:
            raise BadDimsError("ginibre needs (rows, cols)")
        return _ginibre(rng, *t)
    if kind in ("psd", "pd", "density", "unitary"):
        if len(t) != 1:
            raise BadDimsError(f"{kind} needs a single dimension")
        n = t[0]
        if kind == "psd":
            return _psd(rng, n)
        if kind == "pd":
            return _pd(rng, n)
        if kind == "density":
            return _density(rng, n)
        return _isometry(rng, n, n)
    if kind in ("bipartite", "bipartite_psd", "bipartite_pd", "bipartite_density"):
        if len(t) != 2:
            raise BadDimsError(f"{kind} needs (m, n)")
        m, n = t
        size = m * n
        if kind == "bipartite":
            mat = _ginibre(rng, size, size)
        elif kind == "bipartite_psd":
            mat = _psd(rng, size)
        elif kind == "bipartite_pd":
            mat = _pd(rng, size)
        else:
            mat = _density(rng, size)
        return BipartiteOperator(mat, m, n)
    if kind == "channel":
        if len(t) != 3:
            raise BadDimsError("channel needs (m, n, d)")
        return _channel(rng, *t)
    raise KindMismatchError(f"unknown sample kind {kind!r}")


def _trial_seed(base_seed: int, tag: str, index: int) -> int:
    digest = hashlib.sha256(f"{base_seed}:{tag}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# ---------------------------------------------------------------------------
# margin helpers


def _slack(small: float, large: float) -> float:
    """Normalized margin of the inequality small <= large."""
    return float((large - small) / max(1.0, abs(small), abs(large)))


def _dim_factor(n: int, p: float) -> float:
    """n^((p-1)/p), continued as n at p = +inf."""
    if math.isinf(p):
        return float(n)
    return float(n) ** ((p - 1.0) / p)


def _env_dim(ch: StinespringChannel, params) -> int:
    mode = params.get("env_mode", "choi_rank")
    if mode == "dim_env":
        return ch.dim_env
    if mode == "choi_rank":
        return choi_rank(ch)
    raise PreconditionError(f"unknown env_dim mode {mode!r}")


# ---------------------------------------------------------------------------
# evaluators (public operations of the other modules only)


def _eval_kpn1(w: BipartiteOperator, pr) -> float:
    k, p = pr["k"], pr["p"]
    qa = partial_trace_b(w)
    bound = _dim_factor(w.dim_b, p) * kp_norm(w.matrix, k * w.dim_b, p)
    return _slack(kp_norm(qa, k, p), bound)


def _eval_spn1(w: BipartiteOperator, pr) -> float:
    p = pr["p"]
    qa = partial_trace_b(w)
    return _slack(schatten_norm(qa, p), _dim_factor(w.dim_b, p) * schatten_norm(w.matrix, p))


def _eval_tfsn(w: BipartiteOperator, pr) -> float:
    qa = partial_trace_b(w)
    n = w.dim_b
    variant = pr["variant"]
    if variant == "trace":
        return _slack(schatten_norm(qa, 1.0), schatten_norm(w.matrix, 1.0))
    if variant == "frobenius":
        return _slack(schatten_norm(qa, 2.0), math.sqrt(n) * schatten_norm(w.matrix, 2.0))
    if variant == "spectral":
        return _slack(schatten_norm(qa, math.inf), n * schatten_norm(w.matrix, math.inf))
    raise PreconditionError(f"unknown variant {variant!r}")


def _eval_kpk1(w: BipartiteOperator, pr) -> float:
    k = pr["k"]
    qa = partial_trace_b(w)
    return _slack(kyfan_norm(qa, k), kyfan_norm(w.matrix, k * w.dim_b))


def _eval_kpk2(w: BipartiteOperator, pr) -> float:
    qa = partial_trace_b(w)
    return _slack(schatten_norm(qa, math.inf), kyfan_norm(w.matrix, w.dim_b))


def _eval_tpn2(q: np.ndarray, pr) -> float:
    k, p, qq = pr["k"], pr["p"], pr["q"]
    factor = float(k) ** ((qq - 1.0) / (p * qq))
    return _slack(kp_norm(q, k, p), factor * kp_norm(q, k, p * qq))


def _eval_cpn1(w: BipartiteOperator, pr) -> float:
    k, p, qq = pr["k"], pr["p"], pr["q"]
    n = w.dim_b
    qa = partial_trace_b(w)
    factor = (float(k) ** (qq - 1.0) * float(n) ** (p * qq - 1.0)) ** (1.0 / (p * qq))
    return _slack(kp_norm(qa, k, p), factor * kp_norm(w.matrix, k * n, p * qq))


def _eval_kqn1(w: BipartiteOperator, pr) -> float:
    k, p = pr["k"], pr["p"]
    qa = partial_trace_b(w)
    bound = _dim_factor(w.dim_b, p) * kp_antinorm(w.matrix, k * w.dim_b, p)
    return _slack(bound, kp_antinorm(qa, k, p))


def _eval_kqn2(w: BipartiteOperator, pr) -> float:
    p = pr["p"]
    qa = partial_trace_b(w)
    bound = _dim_factor(w.dim_b, p) * schatten_antinorm(w.matrix, p)
    return _slack(bound, schatten_antinorm(qa, p))


def _eval_kqk1(w: BipartiteOperator, pr) -> float:
    k = pr["k"]
    qa = partial_trace_b(w)
    return _slack(kyfan_antinorm(w.matrix, k * w.dim_b), kyfan_antinorm(qa, k))


def _eval_tpn62(q: np.ndarray, pr) -> float:
    k, p, qq = pr["k"], pr["p"], pr["q"]
    factor = float(k) ** ((qq - 1.0) / (p * qq))
    return _slack(factor * kp_antinorm(q, k, p * qq), kp_antinorm(q, k, p))


def _eval_stct1(inst, pr) -> float:
    ch, q = inst
    k, p = pr["k"], pr["p"]
    d = _env_dim(ch, pr)
    out = ch.apply(q)
    sv = singular_values(q, pad_to=k * d)
    bound = _dim_factor(d, p) * gauge_kp(sv, k * d, p)
    return _slack(kp_norm(out, k, p), bound)


def _eval_stctp(inst, pr) -> float:
    ch, q = inst
    p = pr["p"]
    d = _env_dim(ch, pr)
    out = ch.apply(q)
    return _slack(schatten_norm(out, p), _dim_factor(d, p) * schatten_norm(q, p))


def _eval_stct2(inst, pr) -> float:
    ch, q = inst
    k, p = pr["k"], pr["p"]
    d = _env_dim(ch, pr)
    out = ch.apply(q)
    bound = _dim_factor(d, p) * kp_antinorm(q, k * d, p, ambient_dim=ch.dim_out * d)
    return _slack(bound, kp_antinorm(out, k, p))


def _eval_stctpp(inst, pr) -> float:
    ch, q = inst
    p = pr["p"]
    d = _env_dim(ch, pr)
    out = ch.apply(q)
    return _slack(_dim_factor(d, p) * schatten_antinorm(q, p), schatten_antinorm(out, p))


def _eval_et41(w: BipartiteOperator, pr) -> float:
    alpha, s = pr["alpha"], pr["s"]
    n = w.dim_b
    ra = partial_trace_b(w)
    lhs = unified_entropy(w.matrix, alpha, s)
    rhs = float(n) ** ((1.0 - alpha) * s) * unified_entropy(ra, alpha, s) + max_entropy_value(n, alpha, s)
    return _slack(lhs, rhs)


def _eval_ett41(w: BipartiteOperator, pr) -> float:
    alpha = pr["alpha"]
    n = w.dim_b
    ra = partial_trace_b(w)
    lhs = tsallis_entropy(w.matrix, alpha)
    rhs = float(n) ** (1.0 - alpha) * tsallis_entropy(ra, alpha) + alpha_log(float(n), alpha)
    return _slack(lhs, rhs)


def _eval_et42(w: BipartiteOperator, pr) -> float:
    alpha = pr["alpha"]
    ra = partial_trace_b(w)
    return _slack(renyi_entropy(w.matrix, alpha), renyi_entropy(ra, alpha) + math.log(w.dim_b))


def _eval_stctep(inst, pr) -> float:
    ch, rho = inst
    alpha, s = pr["alpha"], pr["s"]
    d = _env_dim(ch, pr)
    out = ch.apply(rho)
    lhs = unified_entropy(rho, alpha, s)
    rhs = float(d) ** ((1.0 - alpha) * s) * unified_entropy(out, alpha, s) + max_entropy_value(d, alpha, s)
    return _slack(lhs, rhs)


def _eval_sat_wrqa(w: BipartiteOperator, pr) -> float:
    if pr["family"] == "norm":
        return -abs(_eval_kpn1(w, pr))
    return -abs(_eval_kqn1(w, pr))


# ---------------------------------------------------------------------------
# instance makers and saturators


def _make_bipartite(kind: str):
    def make(dims, seed):
        return sample(kind, dims, seed)

    return make


def _make_square(builder):
    def make(dims, seed):
        rng = np.random.default_rng(seed)
        return builder(rng, dims[0])

    return make


def _make_channel_pair(input_kind: str):
    def make(dims, seed):
        m, n = dims
        rng = np.random.default_rng(seed)
        d = math.ceil(m / n) + int(rng.integers(0, 3))
        ch = _channel(rng, m, n, d)
        if input_kind == "ginibre":
            q = _ginibre(rng, m, m)
        elif input_kind == "psd":
            q = _psd(rng, m)
        else:
            q = _density(rng, m)
        return ch, q

    return make


def _make_sat_wrqa(dims, seed):
    m, n = dims
    rng = np.random.default_rng(seed)
    c = float(rng.choice((1.0, 2.5)))
    return BipartiteOperator(c * kron(_psd(rng, m), np.eye(n)), m, n)


def _sat_product(base: str):
    def make(dims, seed):
        m, n = dims
        rng = np.random.default_rng(seed)
        r = _psd(rng, m) if base == "psd" else _pd(rng, m)
        return BipartiteOperator(kron(r, np.eye(n)), m, n)

    return make


def _sat_scalar(dims, seed):
    # every eigenvalue multiplicity equals the dimension, so both chained
    # bounds are tight across the whole grid
    return 2.0 * np.eye(dims[0], dtype=np.complex128)


def _sat_identity_bipartite(dims, seed):
    m, n = dims
    return BipartiteOperator(2.0 * np.eye(m * n, dtype=np.complex128), m, n)


def _sat_ptrace_pair(input_kind: str):
    def make(dims, seed):
        m, n = dims
        rng = np.random.default_rng(seed)
        ch = partial_trace_channel(m, n)
        if input_kind == "density":
            q = kron(_density(rng, m), np.eye(n) / n)
        else:
            q = kron(_psd(rng, m), np.eye(n))
        return ch, q

    return make


def _sat_product_density(dims, seed):
    m, n = dims
    rng = np.random.default_rng(seed)
    return BipartiteOperator(kron(_density(rng, m), np.eye(n) / n), m, n)


# ---------------------------------------------------------------------------
# parameter grids


def _ks(m: int):
    return range(1, m + 1)


def _grid_kpn1(w, cfg):
    return [{"k": k, "p": p} for k in _ks(w.dim_a) for p in cfg.norm_p_grid]


def _grid_spn1(w, cfg):
    return [{"p": p} for p in cfg.norm_p_grid]


def _grid_tfsn(w, cfg):
    return [{"variant": v} for v in ("trace", "frobenius", "spectral")]


def _grid_kpk1(w, cfg):
    return [{"k": k} for k in _ks(w.dim_a)]


def _grid_single(w, cfg):
    return [{}]


def _grid_tpn2(q, cfg):
    m = q.shape[0]
    return [{"k": k, "p": p, "q": qq} for k in _ks(m) for (p, qq) in cfg.pq_grid]


def _grid_cpn1(w, cfg):
    return [{"k": k, "p": p, "q": qq} for k in _ks(w.dim_a) for (p, qq) in cfg.pq_grid]


def _grid_kqn1(w, cfg):
    return [{"k": k, "p": p} for k in _ks(w.dim_a) for p in cfg.antinorm_p_grid]


def _grid_kqn2(w, cfg):
    return [{"p": p} for p in cfg.negative_p_grid]


def _grid_tpn62(q, cfg):
    m = q.shape[0]
    return [{"k": k, "p": p, "q": qq} for k in _ks(m) for (p, qq) in cfg.subunit_pq_grid]


def _grid_stct1(inst, cfg):
    ch, _ = inst
    return [{"k": k, "p": p} for k in _ks(ch.dim_out) for p in cfg.norm_p_grid]


def _grid_stctp(inst, cfg):
    return [{"p": p} for p in cfg.norm_p_grid]


def _grid_stct2(inst, cfg):
    ch, _ = inst
    return [{"k": k, "p": p} for k in _ks(ch.dim_out) for p in cfg.antinorm_p_grid]


def _grid_stctpp(inst, cfg):
    return [{"p": p} for p in cfg.antinorm_p_grid]


def _grid_alpha_s(w, cfg):
    return [{"alpha": a, "s": s} for a in cfg.alpha_grid for s in cfg.s_grid]


def _grid_alpha(w, cfg):
    return [{"alpha": a} for a in cfg.alpha_grid]


def _grid_sat_wrqa(w, cfg):
    norm_part = [
        {"k": k, "p": p, "family": "norm"} for k in _ks(w.dim_a) for p in cfg.norm_p_grid
    ]
    anti_part = [
        {"k": k, "p": p, "family": "antinorm"} for k in _ks(w.dim_a) for p in cfg.antinorm_p_grid
    ]
    return norm_part + anti_part


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class InequalityCase:
    id: str
    description: str
    paper_eq: str
    instance_kind: str
    make_instance: Callable
    param_grid: Callable
    evaluate: Callable
    saturator: Optional[Callable] = None


def _case(cid, description, paper_eq, kind, make, grid, evaluate, saturator=None):
    return InequalityCase(cid, description, paper_eq, kind, make, grid, evaluate, saturator)


REGISTRY: dict[str, InequalityCase] = {}
for _c in (
    _case(
        "KPN1",
        "partial trace against the (k, p) norm of the joint operator",
        "||Tr_B W||_(k)^(p) <= n^((p-1)/p) ||W||_(kn)^(p)",
        "bipartite",
        _make_bipartite("bipartite"),
        _grid_kpn1,
        _eval_kpn1,
        _sat_product("psd"),
    ),
    _case(
        "SPN1",
        "partial trace against the Schatten norm of the joint operator",
        "||Tr_B W||_p <= n^((p-1)/p) ||W||_p",
        "bipartite",
        _make_bipartite("bipartite"),
        _grid_spn1,
        _eval_spn1,
        _sat_product("psd"),
    ),
    _case(
        "TFSN",
        "trace, Frobenius, and spectral norm forms of the partial trace bound",
        "||Tr_B W||_1 <= ||W||_1; ||Tr_B W||_2 <= sqrt(n) ||W||_2; ||Tr_B W||_inf <= n ||W||_inf",
        "bipartite",
        _make_bipartite("bipartite"),
        _grid_tfsn,
        _eval_tfsn,
        _sat_product("psd"),
    ),
    _case(
        "KPK1",
        "Ky Fan norm of the partial trace against the joint Ky Fan norm",
        "||Tr_B W||_(k) <= ||W||_(kn)",
        "bipartite",
        _make_bipartite("bipartite"),
        _grid_kpk1,
        _eval_kpk1,
        _sat_product("psd"),
    ),
    _case(
        "KPK2",
        "spectral norm of the partial trace against the Ky Fan n-norm",
        "||Tr_B W||_inf <= ||W||_(n)",
        "bipartite",
        _make_bipartite("bipartite"),
        _grid_single,
        _eval_kpk2,
        _sat_product("psd"),
    ),
    _case(
        "TPN2",
        "(k, p) norm against the (k, pq) norm of the same operator",
        "||R||_(k)^(p) <= k^((q-1)/(pq)) ||R||_(k)^(pq)",
        "matrix",
        _make_square(_ginibre_square),
        _grid_tpn2,
        _eval_tpn2,
        _sat_scalar,
    ),
    _case(
        "CPN1",
        "chained partial trace and exponent interpolation bound",
        "||Tr_B W||_(k)^(p) <= [k^(q-1) n^(pq-1)]^(1/(pq)) ||W||_(kn)^(pq)",
        "bipartite",
        _make_bipartite("bipartite"),
        _grid_cpn1,
        _eval_cpn1,
        _sat_identity_bipartite,
    ),
    _case(
        "KQN1",
        "partial trace against the (k, p) anti-norm of the joint operator",
        "||Tr_B W||_{k}^(p) >= n^((p-1)/p) ||W||_{kn}^(p), 0 < p <= 1",
        "bipartite_psd",
        _make_bipartite("bipartite_psd"),
        _grid_kqn1,
        _eval_kqn1,
        _sat_product("psd"),
    ),
    _case(
        "KQN2",
        "negative exponent Schatten anti-norm bound under partial trace",
        "||Tr_B W||_p >= n^((p-1)/p) ||W||_p, p < 0, W positive definite",
        "bipartite_pd",
        _make_bipartite("bipartite_pd"),
        _grid_kqn2,
        _eval_kqn2,
        _sat_product("pd"),
    ),
    _case(
        "KQK1",
        "Ky Fan anti-norm of the partial trace against the joint anti-norm",
        "||Tr_B W||_{k} >= ||W||_{kn}",
        "bipartite_psd",
        _make_bipartite("bipartite_psd"),
        _grid_kpk1,
        _eval_kqk1,
        _sat_product("psd"),
    ),
    _case(
        "TPN62",
        "(k, p) anti-norm against the (k, pq) anti-norm of the same operator",
        "||R||_{k}^(p) >= k^((q-1)/(pq)) ||R||_{k}^(pq), p, q in (0, 1)",
        "psd_matrix",
        _make_square(_psd),
        _grid_tpn62,
        _eval_tpn62,
        _sat_scalar,
    ),
    _case(
        "STCT1",
        "channel output (k, p) norm against the padded input norm",
        "||Phi(Q)||_(k)^(p) <= d^((p-1)/p) ||Q||_(kd)^(p)",
        "channel_pair",
        _make_channel_pair("ginibre"),
        _grid_stct1,
        _eval_stct1,
        _sat_ptrace_pair("psd"),
    ),
    _case(
        "STCTP",
        "channel output Schatten norm against the input Schatten norm",
        "||Phi(Q)||_p <= d^((p-1)/p) ||Q||_p",
        "channel_pair",
        _make_channel_pair("ginibre"),
        _grid_stctp,
        _eval_stctp,
        _sat_ptrace_pair("psd"),
    ),
    _case(
        "STCT2",
        "channel output (k, p) anti-norm against the padded input anti-norm",
        "||Phi(Q)||_{k}^(p) >= d^((p-1)/p) ||Q||_{kd}^(p), spectrum padded to n*d",
        "channel_pair",
        _make_channel_pair("psd"),
        _grid_stct2,
        _eval_stct2,
        _sat_ptrace_pair("psd"),
    ),
    _case(
        "STCTPP",
        "channel output Schatten anti-norm against the input Schatten anti-norm",
        "||Phi(Q)||_p >= d^((p-1)/p) ||Q||_p, 0 < p <= 1",
        "channel_pair",
        _make_channel_pair("psd"),
        _grid_stctpp,
        _eval_stctpp,
        _sat_ptrace_pair("psd"),
    ),
    _case(
        "ET41",
        "unified entropy of the joint state against the reduced state",
        "E_as(W) <= n^((1-a)s) E_as(Tr_B W) + (1/s) ln_a(n^s)",
        "bipartite_density",
        _make_bipartite("bipartite_density"),
        _grid_alpha_s,
        _eval_et41,
        _sat_product_density,
    ),
    _case(
        "ETT41",
        "Tsallis entropy of the joint state against the reduced state",
        "T_a(W) <= n^(1-a) T_a(Tr_B W) + ln_a(n)",
        "bipartite_density",
        _make_bipartite("bipartite_density"),
        _grid_alpha,
        _eval_ett41,
        _sat_product_density,
    ),
    _case(
        "ET42",
        "Renyi entropy of the joint state against the reduced state",
        "R_a(W) <= R_a(Tr_B W) + ln(n)",
        "bipartite_density",
        _make_bipartite("bipartite_density"),
        _grid_alpha,
        _eval_et42,
        _sat_product_density,
    ),
    _case(
        "STCTEP",
        "input entropy against the channel output entropy",
        "E_as(rho) <= d^((1-a)s) E_as(Phi(rho)) + (1/s) ln_a(d^s)",
        "channel_pair",
        _make_channel_pair("density"),
        _grid_alpha_s,
        _eval_stctep,
        _sat_ptrace_pair("density"),
    ),
    _case(
        "SAT-WRQA",
        "equality of the norm and anti-norm partial trace bounds on c * R (x) I",
        "equality in the (k, p) norm and anti-norm bounds at W = c R (x) I",
        "bipartite_psd",
        _make_sat_wrqa,
        _grid_sat_wrqa,
        _eval_sat_wrqa,
        _make_sat_wrqa,
    ),
):
    REGISTRY[_c.id] = _c

REGISTRY_IDS = tuple(REGISTRY)


def _check_kind(case: InequalityCase, instance) -> None:
    kind = case.instance_kind
    if kind.startswith("bipartite"):
        if not isinstance(instance, BipartiteOperator):
            raise KindMismatchError(f"case {case.id} needs a BipartiteOperator")
        return
    if kind == "channel_pair":
        ok = (
            isinstance(instance, tuple)
            and len(instance) == 2
            and isinstance(instance[0], StinespringChannel)
        )
        if not ok:
            raise KindMismatchError(f"case {case.id} needs a (channel, matrix) pair")
        return
    if isinstance(instance, BipartiteOperator) or not isinstance(instance, np.ndarray):
        raise KindMismatchError(f"case {case.id} needs a plain square matrix")


def evaluate_case(case_id: str, instance, params) -> float:
    """Signed normalized margin of one registry case on one instance."""
    if case_id not in REGISTRY:
        raise KindMismatchError(f"unknown case id {case_id!r}")
    case = REGISTRY[case_id]
    _check_kind(case, instance)
    return case.evaluate(instance, dict(params))


# ---------------------------------------------------------------------------
# audit configuration, runner, report


@dataclass(frozen=True)
class AuditConfig:
    base_seed: int = 42
    trials_per_case: int = 200
    dims: tuple = DEFAULT_DIMS
    tolerance: float = 1e-9
    env_dim_mode: str = "choi_rank"
    case_filter: Optional[tuple] = None
    norm_p_grid: tuple = NORM_P_GRID
    antinorm_p_grid: tuple = ANTINORM_P_GRID
    negative_p_grid: tuple = NEGATIVE_P_GRID
    pq_grid: tuple = PQ_GRID
    subunit_pq_grid: tuple = SUBUNIT_PQ_GRID
    alpha_grid: tuple = ALPHA_GRID
    s_grid: tuple = S_GRID

    def __post_init__(self):
        if self.trials_per_case < 1:
            raise PreconditionError("trials_per_case must be at least 1")
        dims = tuple(tuple(int(x) for x in pair) for pair in self.dims)
        if not dims or any(len(pair) != 2 or min(pair) < 1 for pair in dims):
            raise BadDimsError(f"dims must be nonempty (m, n) pairs, got {self.dims!r}")
        object.__setattr__(self, "dims", dims)
        if not self.tolerance > 0:
            raise PreconditionError("tolerance must be positive")
        if self.env_dim_mode not in ("choi_rank", "dim_env"):
            raise PreconditionError(f"unknown env_dim_mode {self.env_dim_mode!r}")
        if self.case_filter is not None:
            unknown = [c for c in self.case_filter if c not in REGISTRY]
            if unknown:
                raise KindMismatchError(f"unknown case ids {unknown}")


@dataclass(frozen=True)
class AuditReport:
    version: str
    config: dict
    cases: tuple

    @property
    def violations(self) -> int:
        return sum(c["violations"] for c in self.cases)

    def to_text(self) -> str:
        payload = {"version": self.version, "config": self.config, "cases": list(self.cases)}
        return jsonio.dumps(payload) + "\n"


def _config_echo(cfg: AuditConfig) -> dict:
    return {
        "base_seed": cfg.base_seed,
        "trials_per_case": cfg.trials_per_case,
        "dims": [list(pair) for pair in cfg.dims],
        "tolerance": cfg.tolerance,
        "env_dim_mode": cfg.env_dim_mode,
        "case_filter": list(cfg.case_filter) if cfg.case_filter is not None else None,
        "norm_p_grid": list(cfg.norm_p_grid),
        "antinorm_p_grid": list(cfg.antinorm_p_grid),
        "negative_p_grid": list(cfg.negative_p_grid),
        "pq_grid": [list(pq) for pq in cfg.pq_grid],
        "subunit_pq_grid": [list(pq) for pq in cfg.subunit_pq_grid],
        "alpha_grid": list(cfg.alpha_grid),
        "s_grid": list(cfg.s_grid),
        "prng": dict(PRNG_INFO),
    }


def _case_extras(cid: str, trial_stats: dict):
    if cid == "KPK2":
        return {"dominance_strict_count": trial_stats["dominance_strict_count"]}
    if cid == "KQK1":
        return {"equivalence_max_dev": trial_stats["equivalence_max_dev"]}
    if cid == "TPN2":
        flat = np.diag([2.0, 2.0, 1.0]).astype(complex)
        tilted = np.diag([3.0, 2.0, 1.0]).astype(complex)
        pr = {"k": 2, "p": 1.0, "q": 2.0}
        return {
            "equality_margin": evaluate_case(cid, flat, pr),
            "strict_margin": evaluate_case(cid, tilted, pr),
        }
    if cid == "TPN62":
        flat = np.diag([1.0, 1.0, 3.0]).astype(complex)
        tilted = np.diag([3.0, 2.0, 1.0]).astype(complex)
        pr = {"k": 2, "p": 0.5, "q": 0.5}
        return {
            "equality_margin": evaluate_case(cid, flat, pr),
            "strict_margin": evaluate_case(cid, tilted, pr),
        }
    return None


def _update_trial_stats(cid: str, inst, stats: dict) -> None:
    if cid == "KPK2":
        w = inst
        lhs = kyfan_norm(w.matrix, w.dim_b)
        rhs = w.dim_b * schatten_norm(w.matrix, math.inf)
        if rhs - lhs > 1e-9 * max(1.0, lhs, rhs):
            stats["dominance_strict_count"] += 1
    elif cid == "KQK1":
        w = inst
        qa = partial_trace_b(w)
        denom = max(1.0, abs(float(np.trace(w.matrix).real)))
        dev = 0.0
        for k in range(1, w.dim_a):
            raw_anti = kyfan_antinorm(qa, k) - kyfan_antinorm(w.matrix, k * w.dim_b)
            raw_norm = kyfan_norm(w.matrix, (w.dim_a - k) * w.dim_b) - kyfan_norm(qa, w.dim_a - k)
            dev = max(dev, abs(raw_anti - raw_norm) / denom)
        stats["equivalence_max_dev"] = max(stats["equivalence_max_dev"], dev)


def run_audit(config: AuditConfig = AuditConfig()) -> AuditReport:
    """Evaluate every selected registry case on seeded instances.

    Evaluator errors never abort the run; they are counted per case and the
    first message is kept in the record.
    """
    ids = config.case_filter if config.case_filter is not None else REGISTRY_IDS
    records = []
    for cid in REGISTRY_IDS:
        if cid not in ids:
            continue
        case = REGISTRY[cid]
        worst = None
        violations = 0
        failures = 0
        first_failure = None
        stats = {"dominance_strict_count": 0, "equivalence_max_dev": 0.0}
        for trial in range(config.trials_per_case):
            dims = config.dims[trial % len(config.dims)]
            seed = _trial_seed(config.base_seed, cid, trial)
            try:
                inst = case.make_instance(dims, seed)
                for params in case.param_grid(inst, config):
                    pr = dict(params)
                    pr["env_mode"] = config.env_dim_mode
                    margin = case.evaluate(inst, pr)
                    if worst is None or margin < worst:
                        worst = margin
                    if margin < -config.tolerance:
                        violations += 1
                _update_trial_stats(cid, inst, stats)
            except Exception as exc:  # noqa: BLE001 - recorded, not raised
                failures += 1
                if first_failure is None:
                    first_failure = f"{type(exc).__name__}: {exc}"
        saturation = None
        if case.saturator is not None:
            residual = 0.0
            for i, dims in enumerate(config.dims):
                inst = case.saturator(dims, _trial_seed(config.base_seed, cid + ":sat", i))
                for params in case.param_grid(inst, config):
                    pr = dict(params)
                    pr["env_mode"] = config.env_dim_mode
                    residual = max(residual, abs(case.evaluate(inst, pr)))
            saturation = residual
        record = {
            "id": cid,
            "paper_eq": case.paper_eq,
            "trials": config.trials_per_case,
            "violations": violations,
            "worst_margin": worst,
            "saturation_residual": saturation,
            "failures": failures,
        }
        if first_failure is not None:
            record["first_failure"] = first_failure
        extra = _case_extras(cid, stats)
        if extra is not None:
            record["extra"] = extra
        records.append(record)
    return AuditReport(version=__version__, config=_config_echo(config), cases=tuple(records))
