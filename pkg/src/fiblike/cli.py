"""Command line front end: ``fiblike {eval,verify,sum,gf,bench}``.

Exit codes: 0 success / all residuals zero, 1 a failure or mismatch,
2 usage error.  Rationals are given as ``p/q`` or bare integers.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from . import sums
from .bench import bench_row, ladder
from .sequence import SequenceSpec, g_at, g_range
from .series import series_expand
from .verify import FAMILIES, run_family

SCHEMA_VERSION = 1
INDEX_BOUND = 10**6

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected p/q or an integer, got {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def bounded_index(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if abs(value) > INDEX_BOUND:
        raise argparse.ArgumentTypeError(f"index {value} outside +/-{INDEX_BOUND}")
    return value


def non_negative(text: str) -> int:
    value = bounded_index(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _spec_from(args: argparse.Namespace, parser: argparse.ArgumentParser) -> SequenceSpec:
    try:
        return SequenceSpec(args.g0, args.g1)
    except ValueError as exc:
        parser.error(str(exc))
        raise  # unreachable


def _worker_count(requested: int) -> int:
    env = os.environ.get("FIBLIKE_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, requested)


# -- eval -------------------------------------------------------------------

def cmd_eval(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _spec_from(args, parser)
    if args.at is not None:
        if args.lo is not None or args.hi is not None:
            parser.error("--at cannot be combined with --from/--to")
        print(g_at(spec, args.at))
        return 0
    if args.lo is None or args.hi is None:
        parser.error("give --at, or both --from and --to")
    if args.lo > args.hi:
        parser.error("--from must not exceed --to")
    for j, value in zip(range(args.lo, args.hi + 1), g_range(spec, args.lo, args.hi)):
        print(j, value)
    return 0


# -- verify -----------------------------------------------------------------

def build_report(args: argparse.Namespace) -> dict:
    families = FAMILIES if args.family == "all" else (args.family,)
    workers = _worker_count(args.workers)
    suites = []
    timing = {}
    for family in families:
        t0 = time.perf_counter()
        for rep in run_family(family, args.range, workers, args.seed, args.samples):
            entry = rep.to_dict()
            entry["family"] = family
            suites.append(entry)
        timing[family] = round(time.perf_counter() - t0, 6)
    return {
        "version": SCHEMA_VERSION,
        "tool": f"fiblike {__version__}",
        "config": {
            "family": args.family,
            "range": args.range,
            "seed": args.seed,
            "samples": args.samples,
        },
        "passed": all(not s["failures"] for s in suites),
        "suites": suites,
        "timing": {"workers": workers, "seconds": timing},
    }


def format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "identity", "checked", "failures", "degenerate",
                         "degenerate_failures"])
        for s in report["suites"]:
            writer.writerow([s["family"], s["identity"], s["checked"], len(s["failures"]),
                             len(s["degenerate"]), len(s["degenerate_failures"])])
        return buf.getvalue()
    lines = []
    for s in report["suites"]:
        status = "PASS" if not s["failures"] else "FAIL"
        lines.append(
            f"{status} {s['identity']:<28} checked={s['checked']} "
            f"failures={len(s['failures'])} degenerate={len(s['degenerate'])}"
        )
        for f in s["failures"][:10]:
            lines.append(f"    {f['params']} residual={f['residual']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.range < 0:
        parser.error("--range must be >= 0")
    report = build_report(args)
    text = format_report(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["passed"] else 1


# -- sum --------------------------------------------------------------------

def _sum_pair(args: argparse.Namespace, spec: SequenceSpec) -> tuple[Fraction, Fraction]:
    x, n, k, s = args.x, args.n, args.k, args.s
    if args.kind == "sq":
        return sums.sum_sq_closed(spec, k, x, n), sums.sum_sq_brute(spec, k, x, n)
    if args.kind == "sq-initfree":
        return sums.sum_sq_initfree(spec, k, x, n), sums.sum_sq_brute(spec, k, x, n)
    if args.kind == "fsq":
        return sums.sum_F_sq_closed(x, n), sums.sum_sq_brute(SequenceSpec(0, 1), 0, x, n)
    if args.kind == "product":
        return sums.sum_product_closed(spec, k, s, x, n), sums.product_sum_brute(spec, k, s, x, n)
    if args.kind == "spread":
        return sums.spread_product_closed(spec, k, x, n), sums.product_sum_brute(spec, k, -k, x, n)
    if args.kind == "corollary1":
        return sums.corollary_product_sums(spec, x, n)[0], sums.product_sum_brute(spec, 1, -2, x, n)
    if args.kind == "corollary2":
        return sums.corollary_product_sums(spec, x, n)[1], sums.product_sum_brute(spec, 0, -1, x, n)
    raise AssertionError(args.kind)


def cmd_sum(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _spec_from(args, parser)
    try:
        closed, brute = _sum_pair(args, spec)
    except sums.DegenerateFactor as exc:
        parser.error(str(exc))
    match = closed == brute
    print(closed, brute, "match" if match else "MISMATCH")
    return 0 if match else 1


# -- gf ---------------------------------------------------------------------

def cmd_gf(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.which == "fib-squares":
        coeffs = series_expand(sums.FIB_SQ_NUM, sums.CHAR_DEN, args.order)
        report = sums.gf_fib_square_check(args.order)
    else:
        spec = _spec_from(args, parser)
        num, den, correction = sums.spread_gf_parts(spec, args.k)
        expanded = series_expand(num, den, args.order)
        coeffs = [c + correction[t] for t, c in enumerate(expanded)]
        report = sums.gf_spread_product_check(spec, args.k, args.order)
    print(" ".join(str(c) for c in coeffs))
    if report.failures:
        for params, residual in report.failures:
            print(f"mismatch at {params}: residual {residual}", file=sys.stderr)
        return 1
    return 0


# -- bench ------------------------------------------------------------------

def cmd_bench(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _spec_from(args, parser)
    try:
        ns = ladder(args.n_min, args.n_max, args.factor)
    except ValueError as exc:
        parser.error(str(exc))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "t_closed", "t_brute", "ratio", "brute_complete"])
    status = 0
    for n in ns:
        row = bench_row(spec, args.k, args.x, n, args.budget)
        if row.match is False:
            status = 1
        writer.writerow([n, f"{row.t_closed:.6g}", f"{row.t_brute:.6g}",
                         f"{row.ratio:.6g}", int(row.brute_complete)])
    return status


# -- parser -----------------------------------------------------------------

def _add_spec_args(p: argparse.ArgumentParser, g0: int = 0, g1: int = 1) -> None:
    p.add_argument("--g0", type=int, default=g0, help="initial term G_0")
    p.add_argument("--g1", type=int, default=g1, help="initial term G_1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiblike",
        description="Exact identities and sums for squares of Fibonacci-like numbers.",
    )
    parser.add_argument("--version", action="version", version=f"fiblike {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print sequence values")
    _add_spec_args(p)
    p.add_argument("--at", type=bounded_index)
    p.add_argument("--from", dest="lo", type=bounded_index)
    p.add_argument("--to", dest="hi", type=bounded_index)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="sweep identity families over parameter grids")
    p.add_argument("--family", choices=FAMILIES + ("all",), default="all")
    p.add_argument("--range", type=int, default=4, help="parameter bound R (grids span -R..R)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="seed for sampled catalog grids")
    p.add_argument("--samples", type=int, default=20000,
                   help="random tuples per wide catalog entry")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sum", help="closed form vs brute force for one weighted sum")
    p.add_argument("--kind", default="sq",
                   choices=("sq", "sq-initfree", "fsq", "product", "spread",
                            "corollary1", "corollary2"))
    _add_spec_args(p)
    p.add_argument("--k", type=bounded_index, default=0)
    p.add_argument("--s", type=bounded_index, default=1)
    p.add_argument("--x", type=parse_rational, default=Fraction(1))
    p.add_argument("--n", type=non_negative, required=True)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("gf", help="expand a generating function")
    p.add_argument("--which", choices=("fib-squares", "spread"), default="fib-squares")
    _add_spec_args(p)
    p.add_argument("--k", type=bounded_index, default=0)
    p.add_argument("--order", type=non_negative, required=True)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("bench", help="closed form vs direct summation timings (CSV)")
    _add_spec_args(p, 2, 1)
    p.add_argument("--k", type=bounded_index, default=0)
    p.add_argument("--x", type=parse_rational, default=Fraction(1))
    p.add_argument("--n-min", type=non_negative, default=1000)
    p.add_argument("--n-max", type=non_negative, default=10**6)
    p.add_argument("--factor", type=int, default=10)
    p.add_argument("--budget", type=float, default=None,
                   help="seconds after which a brute-force run is abandoned")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
