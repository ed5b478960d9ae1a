"""Command line front end: ``eulerian gen | check | hankel``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 enumeration budget
exceeded. Rationals are given as ``p/q`` or integers; decimals are rejected.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import formats, moments, triangles, verify
from .errors import BudgetExceeded
from .signed_permutations import brute_triangle
from .triangles import Family

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")

# family -> routes it supports
ROUTES = {
    Family.A: ("recurrence", "closed", "brute"),
    Family.B: ("recurrence", "closed", "brute"),
    Family.D: ("recurrence", "derived", "independent", "brute"),
    Family.DTILDE: ("recurrence", "derived", "independent", "brute"),
    Family.BRENTI_D: ("brute",),
}


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise UsageError(f"not an exact rational (use p/q): {text!r}")
    return Fraction(text)


def parse_rational_list(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",") if part.strip()]


def _family(text: str) -> Family:
    try:
        return Family.parse("A" if text.upper() == "S" else text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args, out) -> int:
    fam = _family(args.family)
    route = args.route or ("brute" if fam is Family.BRENTI_D else "recurrence")
    if route not in ROUTES[fam]:
        raise UsageError(f"route {route!r} is not available for family {fam.value}")
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if route == "brute":
        rows = [brute_triangle(fam, n, budget=args.budget) for n in range(args.n + 1)]
    else:
        rows = [triangles.row(fam, n, route) for n in range(args.n + 1)]
    if args.format == "bfile":
        out.write(formats.to_bfile(rows, args.offset))
    else:
        out.write(formats.ENCODERS[args.format](rows))
    return EXIT_OK


def cmd_check(args, out) -> int:
    ts = parse_rational_list(args.t) if args.t else None
    tol = _tolerance(args.tol)
    results = verify.run_suite(args.suite, args.n_max, ts, tol, args.brute_max)
    failed = [r for r in results if not r.passed]
    if args.json:
        json.dump({"suite": args.suite, "passed": not failed, "checks": [r.as_dict() for r in results]},
                  out, indent=1)
        out.write("\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def _tolerance(text: str | None) -> Fraction:
    if text is None:
        return Fraction(1, 10**9)
    # tolerances are the one place a scientific literal is accepted, e.g. 1e-9
    m = re.fullmatch(r"1e-(\d+)", text.strip())
    if m:
        return Fraction(1, 10 ** int(m.group(1)))
    return parse_rational(text)


def cmd_hankel(args, out) -> int:
    fam = _family(args.family)
    if fam is Family.BRENTI_D:
        raise UsageError("hankel needs family A, B, D or Dtilde")
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    t = parse_rational(args.t)
    v = moments.hankel_verdict(fam, t, args.m)
    for k, d in enumerate(v.minors, start=1):
        out.write(f"minor {k}: {d}\n")
    if v.nonnegative:
        kind = "positive" if v.positive else f"nonnegative, zero at orders {v.zero_orders}"
        out.write(f"PASS ({kind})\n")
        return EXIT_OK
    if fam is Family.DTILDE:
        out.write(f"FAIL (expected-negative: order {v.negative_orders[0]})\n")
        return EXIT_OK
    out.write(f"FAIL (negative at orders {v.negative_orders})\n")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eulerian", description="Eulerian numbers of types A, B and D.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print triangle rows 0..n")
    g.add_argument("--family", required=True, help="A (or S), B, D, Dtilde, BrentiD")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--route", choices=["recurrence", "closed", "brute", "derived", "independent"])
    g.add_argument("--format", choices=sorted(formats.ENCODERS), default="csv")
    g.add_argument("--offset", type=int, default=0, help="first b-file index")
    g.add_argument("--budget", type=int, default=None,
                   help="max elements to enumerate (default: $EULERIAN_ENUM_BUDGET or 1e8)")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="run verification suites")
    c.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    c.add_argument("--n-max", type=int, default=None)
    c.add_argument("--t", default=None, help="comma separated rationals for the moments suite")
    c.add_argument("--tol", default=None, help="e.g. 1e-9 or 1/1000000000")
    c.add_argument("--brute-max", type=int, default=8)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    h = sub.add_parser("hankel", help="leading principal minors of the Hankel matrix of P_n(t)")
    h.add_argument("--family", required=True)
    h.add_argument("--t", required=True)
    h.add_argument("--m", type=int, required=True)
    h.set_defaults(func=cmd_hankel)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"eulerian: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"eulerian: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
