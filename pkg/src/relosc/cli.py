"""Command-line front end.

Commands: ``spectrum``, ``count``, ``relative``, ``flow``, ``verify``.
Each run prints a single machine-readable JSON object on stdout and a
human summary on stderr.  Exit codes: 0 success / agreement, 1
verification disagreement, 2 usage or input error.

Matrix files are JSON objects ``{"N": int, "a": [...], "b": [...]}``;
entries are numbers (float mode) or rational strings "p/q" (exact mode).
The RELOSC_MODE environment variable (auto | exact | float) overrides the
mode inferred from the file contents.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import MarginViolation, ParseError, ReloscError
from .jacobi import JacobiMatrix, to_exact_matrix, to_float_matrix
from .homotopy import eigenvalue_branches
from .numeric import format_scalar, parse_scalar
from .oracle import count_below_oracle, eigenvalues_dense
from .oscillation import count_below, relative_count
from .verify import SUITES, MARGIN

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_INPUT = 2


def parse_matrix(path: str):
    """Load a matrix file; returns (matrix, exact_mode)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")
    for key in ("N", "a", "b"):
        if key not in doc:
            raise ParseError(f"{path}: missing field {key!r}")
    if not isinstance(doc["N"], int):
        raise ParseError(f"{path}: field 'N' must be an integer")
    exact = any(
        isinstance(v, str) for field in ("a", "b") for v in doc[field]
    )
    try:
        a = [parse_scalar(v) for v in doc["a"]]
        b = [parse_scalar(v) for v in doc["b"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return JacobiMatrix(doc["N"], tuple(a), tuple(b)), exact


def _parse_lambda(text: str):
    try:
        if "/" in text:
            return Fraction(text), True
        if "." not in text and "e" not in text.lower():
            return int(text), True
        return float(text), False
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {text!r}: {exc}") from exc


def _run_mode(requested: str, inferred_exact: bool) -> str:
    if requested == "auto":
        return "exact" if inferred_exact else "float"
    return requested


def _coerce(mode: str, h: JacobiMatrix) -> JacobiMatrix:
    return to_exact_matrix(h) if mode == "exact" else to_float_matrix(h)


def _coerce_scalar(mode: str, x):
    return Fraction(x) if mode == "exact" else float(x)


def _emit(report: dict, summary: str) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    sys.stderr.write(summary + "\n")


def cmd_spectrum(args, mode_override: str) -> int:
    h, _ = parse_matrix(args.file)
    s = eigenvalues_dense(h)
    _emit(
        {
            "eigenvalues": list(s.eigenvalues),
            "method": s.method,
            "max_offdiag_residual": s.max_offdiag_residual,
            "n": h.dim,
        },
        f"{h.dim} eigenvalues of {args.file} ({s.method})",
    )
    return EXIT_OK


def cmd_count(args, mode_override: str) -> int:
    h, exact_h = parse_matrix(args.file)
    lam, exact_l = _parse_lambda(args.lam)
    mode = _run_mode(mode_override, exact_h and exact_l)
    h = _coerce(mode, h)
    lam = _coerce_scalar(mode, lam)
    count = count_below(h, lam)
    report = {"count": count, "lambda": format_scalar(lam, mode == "exact"), "mode": mode}
    try:
        oracle = count_below_oracle(eigenvalues_dense(h), float(lam), True, MARGIN)
        report["oracle"] = oracle
        report["agree"] = oracle == count
    except MarginViolation:
        report["oracle"] = None
        report["agree"] = None
    _emit(report, f"count below {args.lam}: {count} (oracle: {report['oracle']})")
    return EXIT_OK if report["agree"] is not False else EXIT_DISAGREE


def cmd_relative(args, mode_override: str) -> int:
    h0, e0 = parse_matrix(args.file0)
    h1, e1 = parse_matrix(args.file1)
    lam0, el0 = _parse_lambda(args.lam0)
    lam1, el1 = _parse_lambda(args.lam1)
    mode = _run_mode(mode_override, e0 and e1 and el0 and el1)
    h0, h1 = _coerce(mode, h0), _coerce(mode, h1)
    lam0, lam1 = _coerce_scalar(mode, lam0), _coerce_scalar(mode, lam1)
    count = relative_count(h0, h1, lam0, lam1)  # raises PairingDisagreement on breach
    report = {
        "relative_count": count,
        "pairings_agree": True,
        "lambda0": format_scalar(lam0, mode == "exact"),
        "lambda1": format_scalar(lam1, mode == "exact"),
        "mode": mode,
    }
    try:
        below1 = count_below_oracle(eigenvalues_dense(h1), float(lam1), True, MARGIN)
        below_eq0 = count_below_oracle(eigenvalues_dense(h0), float(lam0), False, MARGIN)
        report["oracle"] = below1 - below_eq0
        report["agree"] = report["oracle"] == count
    except MarginViolation:
        report["oracle"] = None
        report["agree"] = None
    _emit(report, f"relative count: {count} (oracle: {report['oracle']})")
    return EXIT_OK if report["agree"] is not False else EXIT_DISAGREE


def cmd_flow(args, mode_override: str) -> int:
    h0, _ = parse_matrix(args.file0)
    h1, _ = parse_matrix(args.file1)
    if args.steps < 1:
        raise ParseError("--steps must be >= 1")
    grid = [k / args.steps for k in range(args.steps + 1)]
    kind = "two-phase" if args.two_phase else "linear"
    table = eigenvalue_branches(h0, h1, grid, kind)
    if args.csv:
        for eps, row in zip(table.grid, table.branches):
            sys.stdout.write(",".join(repr(float(x)) for x in (eps, *row)) + "\n")
    else:
        _emit(
            {
                "path": kind,
                "grid": list(table.grid),
                "branches": [list(r) for r in table.branches],
            },
            f"{len(table.grid)} grid points, {len(table.branches[0])} branches ({kind})",
        )
    return EXIT_OK


def cmd_verify(args, mode_override: str) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    suites = {}
    ok = True
    for name in names:
        report = SUITES[name](args.trials, args.seed, max_dim=args.max_dim)
        suites[name] = report.to_dict()
        ok = ok and report.ok
    _emit(
        {"suites": suites, "trials": args.trials, "seed": args.seed, "ok": ok},
        "all suites passed"
        if ok
        else "FAILURES in: " + ", ".join(n for n, r in suites.items() if r["failures"]),
    )
    return EXIT_OK if ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relosc",
        description="Eigenvalue counting for Jacobi matrices via (relative) oscillation theory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="oracle spectrum of a matrix file")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("count", help="eigenvalues below a threshold via node counting")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("relative", help="difference of eigenvalue counts via weighted Wronskian nodes")
    p.add_argument("file0")
    p.add_argument("file1")
    p.add_argument("--lambda0", dest="lam0", required=True)
    p.add_argument("--lambda1", dest="lam1", required=True)
    p.set_defaults(func=cmd_relative)

    p = sub.add_parser("flow", help="eigenvalue branches along the interpolation path")
    p.add_argument("file0")
    p.add_argument("file1")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--two-phase", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("verify", help="randomized verification against the oracle")
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-dim", type=int, default=12)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    mode = os.environ.get("RELOSC_MODE", "auto")
    if mode not in ("auto", "exact", "float"):
        sys.stderr.write(f"relosc: bad RELOSC_MODE {mode!r}\n")
        return EXIT_INPUT
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, mode)
    except ReloscError as exc:
        sys.stderr.write(f"relosc: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
