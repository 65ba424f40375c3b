"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 work budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Sequence

from hkdet.budget import ENV_VAR, WorkBudgetExceeded, default_budget
from hkdet.closedforms import hk_closed, mq_closed, nq_col_bounded_closed
from hkdet.polyfit import PolynomialityError, interpolate_hk, leading_coefficient
from hkdet.staircase import (
    INF,
    CountSpec,
    Kind,
    count_oracle,
    count_oracle_matrix,
)
from hkdet.verify import DEFAULT_LIMITS, SUITES, first_failure, suite_checks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _q_values(args: argparse.Namespace) -> list[int]:
    if (args.q is None) == (args.q_range is None):
        raise UsageError("give exactly one of --q or --q-range")
    if args.q is not None:
        qs = [args.q]
    else:
        try:
            lo, hi = (int(part) for part in args.q_range.split(":"))
        except ValueError:
            raise UsageError(f"--q-range must look like A:B, got {args.q_range!r}")
        qs = list(range(lo, hi + 1))
    if not qs:
        raise UsageError("q range is empty")
    if min(qs) < 0:
        raise UsageError("q must be non-negative")
    return qs


def _emit_records(records: list[dict], fields: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


def cmd_hk(args: argparse.Namespace) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be at least 1")
    records = [
        {"m": args.m, "n": args.n, "q": q, "hk": str(hk_closed(args.m, args.n, q))}
        for q in _q_values(args)
    ]
    sys.stdout.write(_emit_records(records, ("m", "n", "q", "hk"), args.format))
    return EXIT_OK


def _parse_bounds(text: str | None, size: int, default: int | float, what: str):
    if text is None:
        return (default,) * size
    tokens = [t.strip() for t in text.split(",")] if text.strip() else []
    try:
        values = [INF if t.lower() in ("inf", "infinity") else int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"{what} must be naturals or 'inf', got {text!r}")
    if len(values) == 1 and size != 1:
        values = values * size
    if len(values) != size:
        raise UsageError(f"expected {size} values for {what}, got {len(values)}")
    return tuple(values)


def _closed_count(spec: CountSpec) -> int:
    m, n, q = spec.m, spec.n, spec.q
    if spec.kind is Kind.N_TYPE and m == 0:
        return 1
    if q == 0:
        return 0
    rows, cols = set(spec.row_bounds), set(spec.col_bounds)
    if spec.kind is Kind.N_TYPE and rows == {INF}:
        if cols == {INF}:
            return hk_closed(m, n, q)
        if cols == {q - 1}:
            return nq_col_bounded_closed(m, n, q)
    if spec.kind is Kind.M_TYPE and rows <= {INF, q - 1} and cols == {q - 1}:
        return mq_closed(m, n, q)
    raise UsageError(
        "no closed form for these bounds; the closed method covers N-type with "
        "rows=inf and cols=inf or q-1, and M-type with rows=q-1 (or inf) and cols=q-1"
    )


def cmd_count(args: argparse.Namespace) -> int:
    kind = Kind(args.kind)
    if args.q is None:
        raise UsageError("--q is required")
    if args.q < 0 or args.n < 1 or args.m < 0:
        raise UsageError("need m >= 0, n >= 1, q >= 0")
    if kind is Kind.N_TYPE:
        default_rows = default_cols = INF
    else:
        default_rows = default_cols = max(args.q - 1, 0)
    try:
        spec = CountSpec(
            args.m, args.n, args.q,
            _parse_bounds(args.rows, args.m, default_rows, "--rows"),
            _parse_bounds(args.cols, args.n, default_cols, "--cols"),
            kind,
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.method == "closed":
        value = _closed_count(spec)
    elif args.method == "oracle-margins":
        value = count_oracle(spec, args.work_budget)
    else:
        value = count_oracle_matrix(spec, args.work_budget)
    print(value)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suites = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    for suite in suites:
        lim = DEFAULT_LIMITS[suite]
        for name in ("max_m", "max_n", "max_q"):
            value = getattr(args, name)
            if value is not None:
                lim = replace(lim, **{name: value})
        count, failure = first_failure(suite_checks(suite, lim, args.work_budget))
        if failure is not None:
            print(f"{suite}: FAILED after {count} checks", flush=True)
            print(f"counterexample: {failure.describe()}", flush=True)
            return EXIT_FAILED
        print(
            f"{suite}: {count} checks passed "
            f"(max_m={lim.max_m}, max_n={lim.max_n}, max_q={lim.max_q})",
            flush=True,
        )
    return EXIT_OK


def _frac(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def cmd_fit(args: argparse.Namespace) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be at least 1")
    check_upto = args.check_upto if args.check_upto is not None else args.m + args.n + 10
    if check_upto < args.m + args.n:
        raise UsageError(f"--check-upto must be at least m+n = {args.m + args.n}")
    try:
        poly = interpolate_hk(args.m, args.n, check_upto=check_upto)
    except PolynomialityError as exc:
        print(f"polynomiality check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    payload = {
        "m": args.m,
        "n": args.n,
        "degree": poly.degree,
        "coefficients": [_frac(c) for c in poly.coefficients],
        "leading_coefficient": _frac(leading_coefficient(poly)),
        "verified_upto": check_upto,
    }
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkdet",
        description="Generalized Hilbert-Kunz function of k[X]/I_2(X), exactly.",
        epilog=f"Enumeration work budget: --work-budget, else ${ENV_VAR}, else 10^8 steps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--work-budget", type=int, default=None,
                       help=f"max enumeration steps (overrides ${ENV_VAR})")

    p = sub.add_parser("hk", help="tabulate HK(q)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--q-range", metavar="A:B", help="inclusive range of q")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_hk)

    p = sub.add_parser("count", help="one N_q or M_q count")
    p.add_argument("--kind", choices=("nq", "mq"), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rows", help="row bounds: comma-separated naturals or 'inf'")
    p.add_argument("--cols", help="column bounds: comma-separated naturals or 'inf'")
    p.add_argument("--method", choices=("closed", "oracle-margins", "oracle-matrix"),
                   default="closed")
    budget_flag(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check the closed forms against each other and brute force")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-q", type=int)
    budget_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", help="interpolate HK(q) as a polynomial in q")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-upto", type=int)
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "work_budget", None) is None and hasattr(args, "work_budget"):
            args.work_budget = default_budget()
        elif getattr(args, "work_budget", None) is not None and args.work_budget <= 0:
            raise UsageError("--work-budget must be positive")
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hkdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # malformed environment override
        print(f"hkdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WorkBudgetExceeded as exc:
        print(f"hkdet: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
