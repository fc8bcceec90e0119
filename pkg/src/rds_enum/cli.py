"""``rds-enum`` command line.

Exit codes: 0 success, 1 a verification check failed, 2 invalid arguments,
3 a method's range or budget was exceeded.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Sequence

from . import genfunc
from .errors import BudgetExceeded, InvalidOrder, NotExpanded, OrderTooLarge
from .graph_core import CoefficientRow, count_rds_by_cardinality, is_restrained_dominating, make_cycle
from .identities import SUITE_NAMES, run_suite
from .rdp_recurrence import RdPolynomial, iter_rows, rdp_row
from .rds_construct import DEFAULT_BUDGET, construct_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RANGE = 0, 1, 2, 3
METHODS = ("recurrence", "genfunc", "bruteforce", "construct")
FORMATS = ("text", "json", "csv", "latex")


class UsageError(Exception):
    pass


class RangeExceeded(Exception):
    pass


def _dump(obj: object) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _row_json(row: CoefficientRow) -> dict:
    return {"n": row.order, "coeffs": [[i, str(c)] for i, c in row.items()]}


def _csv(rows: Sequence[CoefficientRow]) -> str:
    buf = io.StringIO()
    buf.write("n,i,count\n")
    for row in rows:
        for i, c in row.items():
            buf.write(f"{row.order},{i},{c}\n")
    return buf.getvalue()


def _latex_table(rows: Sequence[CoefficientRow]) -> str:
    width = max(row.order for row in rows)
    lines = [
        r"\begin{tabular}{c|" + "c" * width + "}",
        " & " + " & ".join(str(i) for i in range(1, width + 1)) + r" \\",
        r"\hline",
    ]
    for row in rows:
        cells = [str(row[i]) if i <= row.order else "" for i in range(1, width + 1)]
        lines.append(f"{row.order} & " + " & ".join(cells) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _text_table(rows: Sequence[CoefficientRow]) -> str:
    width = max(row.order for row in rows)
    cell = max(len(str(c)) for row in rows for _, c in row.items())
    cell = max(cell, len(str(width)))
    label = len(str(width))
    out = [" " * label + " | " + " ".join(f"{i:>{cell}}" for i in range(1, width + 1))]
    out.append("-" * len(out[0]))
    for row in rows:
        cells = " ".join(f"{row[i]:>{cell}}" for i in range(1, row.order + 1))
        out.append(f"{row.order:>{label}} | {cells}".rstrip())
    return "\n".join(out) + "\n"


def _render_rows(rows: Sequence[CoefficientRow], fmt: str, n_max: int) -> str:
    if fmt == "csv":
        return _csv(rows)
    if fmt == "json":
        return _dump({"n_max": n_max, "rows": [_row_json(r) for r in rows]}) + "\n"
    if fmt == "latex":
        return _latex_table(rows)
    return _text_table(rows)


def _positive(value: int, what: str, minimum: int = 1) -> int:
    if value < minimum:
        raise UsageError(f"{what} must be >= {minimum}, got {value}")
    return value


def cmd_poly(args: argparse.Namespace) -> str:
    n = _positive(args.n, "n")
    row = rdp_row(n)
    poly = RdPolynomial.from_row(row)
    if args.format == "json":
        return _dump(_row_json(row)) + "\n"
    if args.format == "csv":
        return _csv([row])
    if args.format == "latex":
        return f"$D_r(C_{{{n}}}, x) = {poly.to_latex()}$\n"
    return f"{poly}\n"


def count_with(method: str, n: int, i: int, *, limit: int | None, force: bool, budget: int) -> int:
    """d_r(C_n, i) by one named method; raises RangeExceeded outside that method's domain."""
    if method == "recurrence":
        return rdp_row(n)[i]
    if method == "genfunc":
        if n < genfunc.FIRST_ORDER:
            raise RangeExceeded(f"genfunc covers n >= {genfunc.FIRST_ORDER}")
        return genfunc.coefficient(genfunc.expand(n), n, i)
    if n < 3:
        raise RangeExceeded(f"{method} needs an actual cycle, n >= 3")
    if method == "bruteforce":
        return count_rds_by_cardinality(make_cycle(n), limit=limit, force=force)[i]
    return len(construct_family(n, i, budget=budget))


def cmd_count(args: argparse.Namespace) -> str:
    n = _positive(args.n, "n")
    i = _positive(args.i, "i", minimum=0)
    value = count_with(args.method, n, i, limit=args.brute_limit, force=args.force, budget=args.budget)
    if args.format == "json":
        return _dump({"n": n, "i": i, "method": args.method, "count": str(value)}) + "\n"
    if args.format == "csv":
        return f"n,i,count\n{n},{i},{value}\n"
    return f"{value}\n"


def cmd_table(args: argparse.Namespace) -> str:
    n_max = _positive(args.n_max, "n_max")
    return _render_rows(list(iter_rows(n_max)), args.format, n_max)


def cmd_series(args: argparse.Namespace) -> str:
    n_max = _positive(args.n_max, "n_max", minimum=genfunc.FIRST_ORDER)
    series = genfunc.expand(n_max)
    rows = [series.row(n) for n in range(genfunc.FIRST_ORDER, n_max + 1)]
    return _render_rows(rows, args.format, n_max)


def _fmt_set(s: Sequence[int]) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def cmd_sets(args: argparse.Namespace) -> str:
    n = _positive(args.n, "n", minimum=3)
    i = _positive(args.i, "i", minimum=0)
    family = construct_family(n, i, budget=args.budget, check=args.check)
    if args.check:
        g = make_cycle(n)
        bad = [s for s in family if not is_restrained_dominating(g, s)]
        if bad:
            raise RuntimeError(f"constructed set {_fmt_set(bad[0])} is not restrained dominating")
    if args.format == "json":
        return _dump({"n": n, "i": i, "count": len(family), "sets": [list(s) for s in family]}) + "\n"
    if args.format == "csv":
        return "n,i,set\n" + "".join(f"{n},{i},{' '.join(map(str, s))}\n" for s in family)
    if args.format == "latex":
        raise UsageError("sets has no latex form")
    return "".join(_fmt_set(s) + "\n" for s in family)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    if args.format not in ("text", "json"):
        raise UsageError("verify supports --format text or json")
    try:
        reports = run_suite(args.suite, args.nmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = _dump({"suite": args.suite, "status": "pass" if ok else "fail",
                      "checks": [r.to_dict() for r in reports]}) + "\n"
    else:
        text = "".join(r.summary() + "\n" for r in reports)
        text += f"{'all checks passed' if ok else 'FAILED'} ({len(reports)} checks)\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--brute-limit", type=int, default=None,
                        help="order cutoff for brute force (overrides RDS_BRUTE_LIMIT)")
    common.add_argument("--force", action="store_true", help="run brute force above the cutoff")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest family size that may be materialised")

    parser = argparse.ArgumentParser(prog="rds-enum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="restrained domination polynomial of C_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("count", parents=[common], help="d_r(C_n, i) by one method")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--method", choices=METHODS, default="recurrence")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="coefficient triangle for rows 1..n_max")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", parents=[common], help="x^n y^i coefficients of the generating function")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("sets", parents=[common], help="list the sets in C_n^i")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--check", action="store_true", help="re-validate each set")
    p.set_defaults(func=cmd_sets)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("suite", nargs="?", choices=SUITE_NAMES, default="all")
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, InvalidOrder) as exc:
        print(f"rds-enum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RangeExceeded, OrderTooLarge, BudgetExceeded, NotExpanded) as exc:
        print(f"rds-enum: {exc}", file=sys.stderr)
        return EXIT_RANGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
