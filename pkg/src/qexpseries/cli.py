"""Command-line surface: coefficient tables, evaluation, identity verification.

Exit codes: 0 success / all checks pass, 1 domain or verification failure,
2 usage error. Rationals cross the boundary as exact "p/q" strings; value
columns stay exact unless --decimals asks for an approximation column.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from .errors import ConvergenceError, DomainError
from .identities import (ALL_IDENTITIES, DEFAULT_NS, DEFAULT_QS, SuiteConfig,
                         reports_to_json, run_suite)
from .qexp import eval_log_qexp, eval_qexp, log_coeffs_closed, log_coeffs_recursive, qexp_series
from .scalars import QParam, parse_rational

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?$")

FORMATS = ("text", "csv", "json")

COEFF_COLUMNS = ("k", "qexp_coeff", "log_closed", "log_recursion", "difference")


def _qparam_arg(text: str) -> QParam:
    try:
        return QParam(parse_rational(text))
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _scalar_arg(text: str):
    # integers and "p/q" stay exact; anything else becomes binary64
    t = text.strip()
    try:
        if _RATIONAL_RE.match(t):
            return Fraction(t)
        return float(t)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _factor_count(text: str) -> int:
    value = _nonneg_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2: {text}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qexp",
        description="Exact q-exponential series: coefficient tables, guarded "
                    "evaluation, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="emit 1/[k]_q! and the log coefficients two ways")
    coeffs.add_argument("--q", type=_qparam_arg, required=True, metavar="P/Q")
    coeffs.add_argument("--order", type=_nonneg_int, required=True)
    coeffs.add_argument("--format", choices=FORMATS, default="text")
    coeffs.add_argument("--decimals", type=_positive_int, default=None,
                        help="add decimal-approximation columns with this many significant digits")
    coeffs.set_defaults(func=cmd_coeffs)

    ev = sub.add_parser("eval", help="evaluate E_q(z) and ln E_q(z) with certified bounds")
    ev.add_argument("--q", type=_qparam_arg, required=True, metavar="P/Q")
    ev.add_argument("--z", type=_scalar_arg, required=True,
                    help='argument; "p/q" or integer stays exact, decimals go binary64')
    ev.add_argument("--tol", type=_positive_float, default=1e-12)
    ev.add_argument("--max-terms", type=_positive_int, default=1000)
    ev.add_argument("--format", choices=FORMATS, default="text")
    ev.set_defaults(func=cmd_eval)

    verify = sub.add_parser("verify", help="run identity checks and report pass/fail")
    verify.add_argument("--suite", choices=("all",) + ALL_IDENTITIES, default="all")
    verify.add_argument("--q", type=_qparam_arg, action="append", metavar="P/Q",
                        help="grid value; repeatable (default: built-in grid)")
    verify.add_argument("--n", type=_factor_count, action="append",
                        help="factor count for the product identities; repeatable (default: 2..5)")
    verify.add_argument("--order", type=_positive_int, default=32)
    verify.add_argument("--numeric-order", type=_positive_int, default=24)
    verify.add_argument("--kmax", type=_positive_int, default=64)
    verify.add_argument("--tol", type=_positive_float, default=1e-12)
    verify.add_argument("--format", choices=FORMATS, default="text")
    verify.set_defaults(func=cmd_verify)

    return parser


def _fmt_decimal(value: Fraction, digits: int) -> str:
    return f"{float(value):.{digits}g}"


def cmd_coeffs(args) -> int:
    order = args.order
    series = qexp_series(args.q, order).series
    closed = log_coeffs_closed(order, args.q) if order >= 1 else None
    recursive = log_coeffs_recursive(order, args.q) if order >= 1 else None
    rows = []
    for k in range(order + 1):
        lc = closed.coeff(k) if k >= 1 else Fraction(0)
        lr = recursive.coeff(k) if k >= 1 else Fraction(0)
        row = {
            "k": k,
            "qexp_coeff": str(series.coeffs[k]),
            "log_closed": str(lc),
            "log_recursion": str(lr),
            "difference": str(lc - lr),
        }
        if args.decimals is not None:
            row["qexp_coeff_dec"] = _fmt_decimal(series.coeffs[k], args.decimals)
            row["log_closed_dec"] = _fmt_decimal(lc, args.decimals)
        rows.append(row)

    columns = list(COEFF_COLUMNS)
    if args.decimals is not None:
        columns += ["qexp_coeff_dec", "log_closed_dec"]
    if args.format == "json":
        print(json.dumps({"q": str(args.q), "order": order, "rows": rows},
                         sort_keys=True, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
    else:
        widths = [max(len(str(row[c])) for row in rows + [dict(zip(columns, columns))])
                  for c in columns]
        print("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
        for row in rows:
            print("  ".join(str(row[c]).ljust(w) for c, w in zip(columns, widths)))
    return 0


def cmd_eval(args) -> int:
    z_text = str(args.z)
    try:
        e = eval_qexp(args.q, args.z, args.tol, args.max_terms)
        l = eval_log_qexp(args.q, args.z, args.tol, args.max_terms)
    except (DomainError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = {
            "q": str(args.q),
            "z": z_text,
            "tol": args.tol,
            "qexp": {"value": e.value, "order": e.order,
                     "tail_bound": e.tail_bound, "method": e.method},
            "log_qexp": {"value": l.value, "order": l.order,
                         "tail_bound": l.tail_bound, "method": l.method},
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["function", "value", "order", "tail_bound", "method"])
        writer.writerow(["qexp", repr(e.value), e.order, e.tail_bound, e.method])
        writer.writerow(["log_qexp", repr(l.value), l.order, l.tail_bound, l.method])
    else:
        print(f"E_q(z)    = {e.value!r}   [q={args.q}, z={z_text}, "
              f"through z^{e.order}, tail <= {e.tail_bound:.3e}]")
        print(f"ln E_q(z) = {l.value!r}   [{l.method}, "
              f"through z^{l.order}, tail <= {l.tail_bound:.3e}]")
    return 0


def _params_text(report) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))


def cmd_verify(args) -> int:
    qs = tuple(qp.value for qp in args.q) if args.q else DEFAULT_QS
    ns = tuple(args.n) if args.n else DEFAULT_NS
    checks = ALL_IDENTITIES if args.suite == "all" else (args.suite,)
    config = SuiteConfig(qs=qs, ns=ns, order=args.order,
                         numeric_order=args.numeric_order,
                         k_max=args.kmax, tol=args.tol, checks=checks)
    reports = run_suite(config)
    if args.format == "json":
        print(reports_to_json(reports))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["identity", "q", "params", "mode", "passed", "max_residual", "note"])
        for r in reports:
            worst = max((abs(res) for _, res in r.residuals), default=0)
            writer.writerow([r.identity, str(r.q), _params_text(r), r.mode,
                             r.passed, str(worst), r.note])
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.mode:7s} {r.identity:22s} q={r.q} {_params_text(r)}"
            if r.mode == "numeric" and r.residuals:
                line += f"  max|res|={max(res for _, res in r.residuals):.3e}"
            if not r.passed and r.residuals:
                worst_k, worst = r.residuals[0]
                line += f"  worst k={worst_k} residual={worst}"
            if r.note:
                line += f"  ({r.note})"
            print(line)
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
