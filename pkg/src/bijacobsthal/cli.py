"""Command-line front end.

Subcommands: term, matrix, series, sum, verify, bench.  Every rational on
the wire is the exact string "p/q" (or "p" when the denominator is 1);
no floating point is ever printed except benchmark wall times.

Exit codes: 0 all checks passed (modulo declared errata when
--expect-errata is given), 1 a counterexample or mismatch was found,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import matrixseq, scalar, verifier
from .exact import Mat2, format_rational, parse_rational
from .genfunc import build_ogf, series_coeffs
from .matrixseq import (
    DegenerateDiscriminantError,
    term_binet,
    term_closed,
    term_fast,
    term_recurrence,
)
from .report import ALL_IDENTITIES, WEIGHTED_SUM_T6, reports_to_csv
from .scalar import BiParams, SeqKind, scalar_term
from .verifier import (
    GridSpec,
    expected_failure,
    run_grid,
    sum_closed_form,
    sum_direct,
    weighted_sum_direct,
    weighted_sum_printed_form,
)

OK = 0
MISMATCH = 1
USAGE = 2

METHODS = {
    "recurrence": term_recurrence,
    "closed": term_closed,
    "binet": term_binet,
    "fast": term_fast,
}

DEFAULT_BENCH_LADDER = (2 ** 10, 2 ** 12, 2 ** 14, 2 ** 16, 2 ** 17)


def parse_grid_values(text: str) -> tuple[Fraction, ...]:
    """Parse 'lo..hi' (integers, zeros auto-excluded) or 'r1,r2,...'."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        values = tuple(Fraction(v) for v in range(lo, hi + 1) if v != 0)
        if not values:
            raise ValueError(f"range {text!r} contains only zero")
        return values
    values = tuple(parse_rational(part) for part in text.split(","))
    if any(v == 0 for v in values):
        raise ValueError("grid values must be nonzero")
    return values


def mat2_json_dict(m: Mat2) -> dict:
    return {
        "e11": format_rational(m.e11),
        "e12": format_rational(m.e12),
        "e21": format_rational(m.e21),
        "e22": format_rational(m.e22),
    }


def print_matrix(m: Mat2, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(mat2_json_dict(m)))
    elif fmt == "csv":
        print("e11,e12,e21,e22")
        print(",".join(format_rational(e) for e in m.entries()))
    else:
        print(m)


def _params(args: argparse.Namespace) -> BiParams:
    return BiParams(parse_rational(args.a), parse_rational(args.b))


def cmd_term(args: argparse.Namespace) -> int:
    params = _params(args)
    kind = SeqKind(args.kind)
    value = scalar_term(kind, params, args.n)
    if args.format == "json":
        print(json.dumps({
            "kind": kind.value,
            "a": format_rational(params.a),
            "b": format_rational(params.b),
            "n": args.n,
            "value": format_rational(value),
        }))
    elif args.format == "csv":
        print("kind,a,b,n,value")
        print(f"{kind.value},{format_rational(params.a)},"
              f"{format_rational(params.b)},{args.n},{format_rational(value)}")
    else:
        print(format_rational(value))
    return OK


def cmd_matrix(args: argparse.Namespace) -> int:
    params = _params(args)
    if args.method == "all":
        routes = dict(METHODS)
        if params.disc == 0:
            del routes["binet"]
            print("note: ab = -8, root-based route skipped", file=sys.stderr)
        values = {name: fn(params, args.n) for name, fn in routes.items()}
        reference = values["recurrence"]
        for name, value in values.items():
            if value != reference:
                print(f"method mismatch: {name} gave {value}, "
                      f"recurrence gave {reference}", file=sys.stderr)
                return MISMATCH
        print_matrix(reference, args.format)
        return OK
    value = METHODS[args.method](params, args.n)
    print_matrix(value, args.format)
    return OK


def cmd_series(args: argparse.Namespace) -> int:
    params = _params(args)
    coeffs = series_coeffs(build_ogf(params), args.count)
    if args.format == "json":
        print(json.dumps([mat2_json_dict(m) for m in coeffs]))
    elif args.format == "csv":
        print("m,e11,e12,e21,e22")
        for m, coeff in enumerate(coeffs):
            row = ",".join(format_rational(e) for e in coeff.entries())
            print(f"{m},{row}")
    else:
        for coeff in coeffs:
            print(coeff)
    return OK


def cmd_sum(args: argparse.Namespace) -> int:
    params = _params(args)
    n = args.n
    if args.x is not None:
        x = parse_rational(args.x)
        direct = weighted_sum_direct(params, x, n)
        closed = weighted_sum_printed_form(params, x, n)
    else:
        direct = sum_direct(params, n)
        closed = sum_closed_form(params, n)
    if not args.both:
        print_matrix(direct, args.format)
        return OK
    match = direct == closed
    if args.format == "json":
        print(json.dumps({
            "direct": mat2_json_dict(direct),
            "closed_form": mat2_json_dict(closed),
            "match": match,
        }))
    elif args.format == "csv":
        print("side,e11,e12,e21,e22")
        print("direct," + ",".join(format_rational(e) for e in direct.entries()))
        print("closed_form," + ",".join(format_rational(e) for e in closed.entries()))
    else:
        print(f"direct      {direct}")
        print(f"closed-form {closed}")
        print("MATCH" if match else "MISMATCH")
    return OK if match else MISMATCH


def cmd_verify(args: argparse.Namespace) -> int:
    suites = ALL_IDENTITIES if "all" in args.suite else tuple(args.suite)
    grid = GridSpec(
        a_values=parse_grid_values(args.a),
        b_values=parse_grid_values(args.b),
        n_max=args.n_max,
        suites=suites,
        x_values=tuple(parse_rational(p) for p in args.x.split(",")),
    )
    reports = run_grid(grid)
    if args.format == "json":
        for report in reports:
            print(report.to_json())
    elif args.format == "csv":
        print(reports_to_csv(reports))
    else:
        for report in reports:
            print(report.to_plain())
    unexpected = [
        r for r in reports
        if r.status == "FAIL" and not (args.expect_errata and expected_failure(r))
    ]
    if unexpected:
        print(f"{len(unexpected)} unexpected failing report(s)", file=sys.stderr)
        return MISMATCH
    return OK


def _timed_min(fn, repeat: int) -> tuple[float, Mat2]:
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def bench_rows(params: BiParams, ladder: Sequence[int],
               repeat: int) -> list[tuple[str, int, float, int]]:
    """Wall-time rows (method, n, seconds, term_bits); min over `repeat` runs.

    The naive route iterates the recurrence freshly each run and the fast
    route clears the scalar memo first, so neither side benefits from
    caches.  Outputs of the two routes are checked equal; a mismatch raises.
    """
    rows = []
    for n in ladder:
        def naive() -> Mat2:
            it = matrixseq.iter_terms(params)
            for _ in range(n):
                next(it)
            return next(it)

        def fast() -> Mat2:
            scalar.clear_caches()
            return term_fast(params, n)

        naive_t, naive_value = _timed_min(naive, repeat)
        fast_t, fast_value = _timed_min(fast, repeat)
        if naive_value != fast_value:
            raise AssertionError(f"bench self-test failed at n={n}")
        bits = max(e.numerator.bit_length() for e in naive_value.entries())
        rows.append(("recurrence", n, naive_t, bits))
        rows.append(("fast", n, fast_t, bits))
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    params = _params(args)
    ladder = [int(part) for part in args.ladder.split(",")]
    try:
        rows = bench_rows(params, ladder, args.repeat)
    except AssertionError as exc:
        print(str(exc), file=sys.stderr)
        return MISMATCH
    print("method,n,wall_ms,term_bits")
    for method, n, seconds, bits in rows:
        print(f"{method},{n},{seconds * 1000:.3f},{bits}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bijacobsthal",
        description="Exact bi-periodic Jacobsthal sequence terms, matrix "
                    "terms by four routes, series expansion, identity "
                    "verification, and benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("plain", "json", "csv"),
                       default="plain")

    p_term = sub.add_parser("term", help="one scalar sequence term")
    p_term.add_argument("--kind", required=True,
                        choices=[k.value for k in SeqKind])
    p_term.add_argument("--a", required=True)
    p_term.add_argument("--b", required=True)
    p_term.add_argument("--n", type=int, required=True)
    add_common(p_term)
    p_term.set_defaults(handler=cmd_term)

    p_matrix = sub.add_parser("matrix", help="one matrix term")
    p_matrix.add_argument("--a", required=True)
    p_matrix.add_argument("--b", required=True)
    p_matrix.add_argument("--n", type=int, required=True)
    p_matrix.add_argument("--method", default="all",
                          choices=(*METHODS.keys(), "all"))
    add_common(p_matrix)
    p_matrix.set_defaults(handler=cmd_matrix)

    p_series = sub.add_parser("series", help="generating-function expansion")
    p_series.add_argument("--a", required=True)
    p_series.add_argument("--b", required=True)
    p_series.add_argument("--count", type=int, required=True)
    add_common(p_series)
    p_series.set_defaults(handler=cmd_series)

    p_sum = sub.add_parser("sum", help="partial sums, oracle vs closed form")
    p_sum.add_argument("--a", required=True)
    p_sum.add_argument("--b", required=True)
    p_sum.add_argument("--n", type=int, required=True)
    p_sum.add_argument("--x", default=None,
                       help="weight 1/x^k per term (omit for the plain sum)")
    p_sum.add_argument("--both", action="store_true",
                       help="print the closed form next to the oracle and "
                            "flag MATCH/MISMATCH")
    add_common(p_sum)
    p_sum.set_defaults(handler=cmd_sum)

    p_verify = sub.add_parser("verify", help="identity suites over a grid")
    p_verify.add_argument("--suite", action="append", required=True,
                          choices=(*ALL_IDENTITIES, "all"),
                          help="repeatable; 'all' runs every suite")
    p_verify.add_argument("--a", required=True,
                          help="grid: 'lo..hi' integers or 'r1,r2,...'")
    p_verify.add_argument("--b", required=True)
    p_verify.add_argument("--n-max", type=int, default=verifier.DEFAULT_N_MAX)
    p_verify.add_argument("--x", default="1,2,1/2,3",
                          help="weights for the weighted-sum suite")
    p_verify.add_argument("--expect-errata", action="store_true",
                          help="tolerate the documented expected failures "
                               f"({WEIGHTED_SUM_T6} with x != 1)")
    add_common(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    p_bench = sub.add_parser("bench", help="naive vs fast wall time (CSV)")
    p_bench.add_argument("--a", default="1")
    p_bench.add_argument("--b", default="1")
    p_bench.add_argument("--ladder",
                         default=",".join(str(n) for n in DEFAULT_BENCH_LADDER))
    p_bench.add_argument("--repeat", type=int, default=1,
                         help="timed runs per point; the minimum is kept")
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join '--flag -3..3' into '--flag=-3..3' so argparse does not read
    negative grid values or rationals as option names."""
    value_flags = {"--a", "--b", "--x", "--n", "--n-max", "--ladder", "--count"}
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok in value_flags and nxt is not None and nxt.startswith("-")
                and len(nxt) > 1 and nxt[1].isdigit()):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_merge_negative_values(list(argv)))
    try:
        return args.handler(args)
    except DegenerateDiscriminantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def run() -> None:  # console-script entry point
    sys.exit(main())
