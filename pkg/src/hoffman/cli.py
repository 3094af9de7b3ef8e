"""
Command-line front end.

Exit codes: 0 everything passed, 1 a verification mismatch, 2 usage or parse
error, 3 a numeric evaluation that could not reach its tolerance.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identities as ids
from .algebra import format_fraction, format_index, parse_index
from .numeric import (
    NumericConfig,
    NumericError,
    PrecisionError,
    check_homomorphism,
    check_sine_coefficients,
    eval_combination,
)
from .parser import ParseError, evaluate_text

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

VERIFIERS = {
    "main": ("order", ids.verify_main),
    "sakata": ("order", ids.verify_sakata),
    "reduction": ("order", ids.verify_reduction),
    "eq2": ("n", ids.verify_eq2),
    "odd": ("n", ids.verify_odd_vanishing),
    "binomial": ("kmax", ids.verify_binomial),
    "cases": ("n", ids.verify_case_analysis),
}


class _Output:
    def __init__(self, as_json: bool, quiet: bool, stream=None):
        self.as_json = as_json
        self.quiet = quiet
        self.stream = stream or sys.stdout

    def emit(self, text: str, data) -> None:
        if self.quiet:
            return
        if self.as_json:
            print(json.dumps(data, indent=2), file=self.stream)
        else:
            print(text, file=self.stream)


def _report_text(report, limit=20) -> str:
    lines = [report.summary()]
    for m in report.mismatches[:limit]:
        d = m.to_dict()
        lines.append(f"  degree {d['degree']} {d['index']}: expected {d['expected']}, got {d['actual']}")
    if len(report.mismatches) > limit:
        lines.append(f"  ... {len(report.mismatches) - limit} more")
    return "\n".join(lines)


def _read_expr(expr: str | None) -> str:
    if expr is None or expr == "-":
        return sys.stdin.read()
    return expr


def _config(args) -> NumericConfig:
    return NumericConfig(tolerance=args.tol, max_terms=args.max_terms, max_depth=args.max_depth)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no output, exit code only")

    numeric = argparse.ArgumentParser(add_help=False)
    numeric.add_argument("--tol", type=float, default=1e-6)
    numeric.add_argument("--max-terms", type=int, default=NumericConfig.max_terms)
    numeric.add_argument("--max-depth", type=int, default=NumericConfig.max_depth)

    p = argparse.ArgumentParser(prog="hoffman", description="Exact stuffle-algebra identity checks.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("expand", parents=[common], help="print an expression in canonical form")
    q.add_argument("expr", nargs="?", help="expression; read from stdin when omitted or '-'")

    q = sub.add_parser("s-poly", parents=[common], help="print S(k)")
    q.add_argument("k", type=int)

    q = sub.add_parser("verify", parents=[common], help="run an exact identity check")
    q.add_argument("identity", choices=sorted(VERIFIERS))
    q.add_argument("--order", type=int, default=12)
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--kmax", type=int, default=200)

    q = sub.add_parser("numeric", parents=[common, numeric], help="evaluate an expression numerically")
    q.add_argument("expr", nargs="?")

    q = sub.add_parser("check", parents=[common], help="numeric cross-checks")
    checks = q.add_subparsers(dest="check", required=True)
    c = checks.add_parser("homomorphism", parents=[common, numeric])
    c.add_argument("u")
    c.add_argument("v")
    c = checks.add_parser("sine", parents=[common, numeric])
    c.add_argument("--nmax", type=int, default=4)
    return p


def _run(args, out: _Output) -> int:
    if args.command == "expand":
        c = evaluate_text(_read_expr(args.expr))
        data = {
            "result": str(c),
            "terms": [{"index": format_index(ix), "coefficient": format_fraction(v)} for ix, v in c.items()],
        }
        out.emit(str(c), data)
        return EXIT_OK

    if args.command == "s-poly":
        if args.k < 0:
            raise ValueError("k must be nonnegative")
        c = ids.s_poly(args.k)
        out.emit(str(c), {"k": args.k, "result": str(c)})
        return EXIT_OK

    if args.command == "verify":
        param, fn = VERIFIERS[args.identity]
        report = fn(getattr(args, param))
        out.emit(_report_text(report), report.to_dict())
        return EXIT_OK if report.passed else EXIT_MISMATCH

    if args.command == "numeric":
        c = evaluate_text(_read_expr(args.expr))
        res = eval_combination(c, _config(args))
        out.emit(str(res), {"expression": str(c), "value": res.value, "error_bound": res.error_bound})
        return EXIT_OK

    if args.check == "homomorphism":
        report = check_homomorphism(parse_index(args.u), parse_index(args.v), _config(args))
    else:
        report = check_sine_coefficients(args.nmax, _config(args))
    out.emit(_report_text(report), report.to_dict())
    return EXIT_OK if report.passed else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = _Output(getattr(args, "json", False), getattr(args, "quiet", False))
    try:
        return _run(args, out)
    except PrecisionError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (ParseError, NumericError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
