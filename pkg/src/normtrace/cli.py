"""Command line front end: compute, ptrace, and audit subcommands.

Exit codes: 0 success, 2 argument or input file problems, 3 domain
precondition failures, 4 audit found violations.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import jsonio
from ._version import __version__
from .antinorms import kp_antinorm, kyfan_antinorm, partial_fidelity, schatten_antinorm
from .audit import DEFAULT_DIMS, REGISTRY_IDS, AuditConfig, run_audit
from .bipartite import BipartiteOperator, partial_trace_a, partial_trace_b, twirl_oracle_b
from .entropy import renyi_entropy, tsallis_entropy, unified_entropy, von_neumann_entropy
from .errors import MatrixFileError, PreconditionError
from .linalg import kron
from .norms import kp_norm, kyfan_norm, schatten_norm


class _ParseFailure(Exception):
    """Argument level problem; maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ParseFailure(message)


def _parse_p(text: str) -> float:
    t = text.strip().lower()
    if t in ("inf", "+inf", "infinity"):
        return math.inf
    try:
        return float(t)
    except ValueError:
        raise _ParseFailure(f"bad exponent {text!r}") from None


def _parse_dims(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise _ParseFailure(f"dims must look like MxN, got {text!r}")
    try:
        m, n = (int(s) for s in parts)
    except ValueError:
        raise _ParseFailure(f"dims must look like MxN, got {text!r}") from None
    if m < 1 or n < 1:
        raise _ParseFailure(f"dims must be positive, got {text!r}")
    return m, n


def _load(path: str) -> np.ndarray:
    try:
        return jsonio.read_matrix_file(path)
    except OSError as exc:
        raise _ParseFailure(f"cannot read {path}: {exc}") from None
    except MatrixFileError as exc:
        raise _ParseFailure(str(exc)) from None


def _require(args, names) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _ParseFailure(f"kind {args.kind!r} needs {', '.join(missing)}")


def _run_compute(args) -> int:
    q = _load(args.matrix)
    if args.kind == "norm":
        _require(args, ("p",))
        p = _parse_p(args.p)
        if args.k is None:
            value = schatten_norm(q, p)
        elif p == 1.0:
            value = kyfan_norm(q, args.k)
        else:
            value = kp_norm(q, args.k, p)
    elif args.kind == "antinorm":
        _require(args, ("p",))
        p = _parse_p(args.p)
        if args.k is None:
            value = schatten_antinorm(q, p)
        elif p == 1.0 and args.ambient_dim is None:
            value = kyfan_antinorm(q, args.k)
        else:
            value = kp_antinorm(q, args.k, p, ambient_dim=args.ambient_dim)
    elif args.kind == "entropy":
        _require(args, ("alpha", "s"))
        alpha, s = float(args.alpha), float(args.s)
        if abs(alpha - 1.0) < 1e-9:
            value = von_neumann_entropy(q)
        elif abs(s) < 1e-12:
            value = renyi_entropy(q, alpha)
        elif abs(s - 1.0) < 1e-12:
            value = tsallis_entropy(q, alpha)
        else:
            value = unified_entropy(q, alpha, s)
    elif args.kind == "fidelity":
        _require(args, ("sigma", "k"))
        value = partial_fidelity(q, _load(args.sigma), args.k)
    else:
        raise _ParseFailure(f"unknown kind {args.kind!r}")
    print(format(value, ".15g"))
    return 0


def _run_ptrace(args) -> int:
    m, n = _parse_dims(args.dims)
    w = BipartiteOperator(_load(args.matrix), m, n)
    reduced = partial_trace_a(w) if args.over == "a" else partial_trace_b(w)
    if args.oracle and args.over == "b":
        twirled = twirl_oracle_b(w)
        rebuilt = kron(reduced, np.eye(n))
        dev = float(np.abs(twirled - rebuilt).max())
        print(f"oracle deviation {dev:.3e}", file=sys.stderr)
    sys.stdout.write(jsonio.matrix_to_text(reduced))
    return 0


def _run_audit(args) -> int:
    dims = tuple(_parse_dims(t) for t in args.dims) if args.dims else DEFAULT_DIMS
    cases = tuple(args.case) if args.case else None
    if cases is not None:
        unknown = [c for c in cases if c not in REGISTRY_IDS]
        if unknown:
            raise _ParseFailure(f"unknown case ids: {', '.join(unknown)}")
    config = AuditConfig(
        base_seed=args.seed,
        trials_per_case=args.trials,
        dims=dims,
        tolerance=args.tolerance,
        env_dim_mode=args.env_dim,
        case_filter=cases,
    )
    report = run_audit(config)
    text = report.to_text()
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    total = report.violations
    failures = sum(c["failures"] for c in report.cases)
    print(
        f"{len(report.cases)} cases, {total} violations, {failures} failures",
        file=sys.stderr,
    )
    return 4 if total > 0 else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="normtrace", description="norm and entropy toolbox")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="evaluate one quantity on a matrix file")
    comp.add_argument("kind", choices=("norm", "antinorm", "entropy", "fidelity"))
    comp.add_argument("matrix", help="path to a matrix JSON file")
    comp.add_argument("--k", type=int, default=None, help="leading index count")
    comp.add_argument("--p", default=None, help="exponent, 'inf' allowed")
    comp.add_argument("--alpha", type=float, default=None, help="entropy order")
    comp.add_argument("--s", type=float, default=None, help="entropy second parameter")
    comp.add_argument("--ambient-dim", type=int, default=None, dest="ambient_dim")
    comp.add_argument("--sigma", default=None, help="second matrix file for fidelity")
    comp.set_defaults(func=_run_compute)

    pt = sub.add_parser("ptrace", help="partial trace of a bipartite matrix file")
    pt.add_argument("matrix", help="path to a matrix JSON file")
    pt.add_argument("--dims", required=True, help="factor sizes as MxN")
    pt.add_argument("--over", choices=("a", "b"), default="b")
    pt.add_argument(
        "--oracle",
        action="store_true",
        help="also run the twirl oracle and report the deviation on stderr",
    )
    pt.set_defaults(func=_run_ptrace)

    aud = sub.add_parser("audit", help="run the inequality audit and emit a JSON report")
    aud.add_argument("--seed", type=int, default=42)
    aud.add_argument("--trials", type=int, default=200)
    aud.add_argument("--dims", nargs="*", default=None, help="pairs like 2x2 3x2")
    aud.add_argument("--tolerance", type=float, default=1e-9)
    aud.add_argument("--env-dim", choices=("choi_rank", "dim_env"), default="choi_rank")
    aud.add_argument("--case", action="append", default=None, help="restrict to one case id")
    aud.add_argument("--out", default=None, help="report path, stdout when omitted")
    aud.set_defaults(func=_run_audit)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
