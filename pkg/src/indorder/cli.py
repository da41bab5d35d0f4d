"""Command-line front end.

Exit codes: 0 on success or a clean scan, 1 when a theorem check fails (or a
conversion is impossible), 2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import ceil, log10
from typing import List, Optional

from ._version import __version__
from .canon import canonical_form
from .errors import IndOrderError, NotConvertible
from .families import Spider, build, graph_from_arg
from .indpoly import independence_polynomial
from .order import compare_polys, verdict_to_jsonable
from .roots import xi_of_poly
from .scans import SCANS, ScanReport
from .sequences import convert, parse_sequence, replay
from .trees import TREE_LIMIT, all_trees, starlike_partitions

DEFAULT_MAX_N = {
    "total-order": 10,
    "sandwich": 10,
    "chains": 12,
    "degree-questions": 10,
    "subgraph": 9,
    "star-op": 10,
}


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _fraction_arg(text: str) -> Fraction:
    try:
        q = Fraction(Decimal(text))
    except (InvalidOperation, ValueError):
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")
    if q <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return q


def cmd_poly(args) -> int:
    g = graph_from_arg(args.graph)
    p = independence_polynomial(g)
    _emit(args, {"graph": args.graph, "n": g.n, "m": g.m, "I": p.to_jsonable()},
          f"{p.human()}\n{p.to_json()}")
    return 0


def cmd_xi(args) -> int:
    g = graph_from_arg(args.graph)
    p = independence_polynomial(g)
    r = xi_of_poly(p)
    if not r.is_exact:
        r = r.refine(args.prec)
    digits = max(1, ceil(-log10(args.prec))) + 1
    dec = r.decimal(digits)
    payload = {"graph": args.graph, "I": p.to_jsonable(), "exact": r.is_exact,
               "lo": str(r.lo), "hi": str(r.hi), "decimal": dec, "precision": str(args.prec)}
    if r.is_exact:
        text = f"{r.lo} (exact)\n{dec}"
    else:
        text = f"{dec}\ninterval [{r.lo}, {r.hi}] width <= {args.prec}"
    _emit(args, payload, text)
    return 0


def cmd_compare(args) -> int:
    g, h = graph_from_arg(args.first), graph_from_arg(args.second)
    pg, ph = independence_polynomial(g), independence_polynomial(h)
    v = compare_polys(pg, ph)
    payload = {"first": args.first, "second": args.second, **verdict_to_jsonable(v, pg, ph)}
    lines = [v.verdict.value]
    if v.witness_first is not None:
        lines.append(f"first does not dominate: I(second) < I(first) at x = {v.witness_first}")
    if v.witness_second is not None:
        lines.append(f"second does not dominate: I(first) < I(second) at x = {v.witness_second}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_convert(args) -> int:
    x, y = parse_sequence(args.x), parse_sequence(args.y)
    try:
        steps = convert(x, y)
    except NotConvertible as exc:
        _emit(args, {"x": list(x), "y": list(y), "convertible": False, "reason": exc.reason,
                     "prefix_index": exc.prefix_index}, f"NotConvertible: {exc.reason}")
        return 1
    path = replay(x, steps)
    payload = {"x": list(x), "y": list(y), "convertible": True,
               "steps": [s.to_jsonable() for s in steps], "path": [list(p) for p in path]}
    text = "\n".join([f"{len(steps)} step(s)"] + [
        f"e({s.j},{s.k}): {tuple(a)} -> {tuple(b)}" for s, a, b in zip(steps, path, path[1:])
    ])
    _emit(args, payload, text)
    return 0


def _one_line(g) -> str:
    return " ".join([str(g.n), str(g.m)] + [f"{u} {v}" for u, v in g.edges()])


def cmd_enumerate(args) -> int:
    corpus = all_trees(args.n, method=args.method)
    lines = [f"{_one_line(t)}\t{canonical_form(t).decode('ascii')}" for t in corpus]
    _write_lines(args.out, lines)
    print(f"{len(corpus)} trees of order {args.n}", file=sys.stderr)
    return 0


def cmd_starlike(args) -> int:
    total = args.value + args.k - 1 if args.by_order else args.value
    parts = starlike_partitions(total, args.k)
    lines = []
    for p in parts:
        t = build(Spider(*p))
        lines.append(f"T{p}\t{_one_line(t)}\t{independence_polynomial(t).human()}")
    _write_lines(args.out, lines)
    return 0


def _write_lines(path: Optional[str], lines: List[str]) -> None:
    body = "".join(line + "\n" for line in lines)
    if path:
        with open(path, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _run_scan(args) -> ScanReport:
    w = args.workers
    name = args.scan
    if name == "starlike":
        return SCANS[name](max_sum=args.max_sum, max_k=args.max_k, workers=w)
    if name == "theorems":
        if args.max_n is None:
            return SCANS[name](workers=w)
        m = args.max_n
        return SCANS[name](m, m, m, m, min(m, args.dag_max_n), workers=w)
    max_n = args.max_n if args.max_n is not None else DEFAULT_MAX_N[name]
    if max_n > TREE_LIMIT:
        raise IndOrderError(f"--max-n is limited to {TREE_LIMIT}")
    kwargs = {"workers": w}
    if args.min_n is not None:
        kwargs["min_n"] = args.min_n
    if name == "chains":
        kwargs["dag_max_n"] = args.dag_max_n
    return SCANS[name](max_n, **kwargs)


def cmd_scan(args) -> int:
    start = time.perf_counter()
    report = _run_scan(args)
    report.runtime = time.perf_counter() - start
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json())
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(report.to_csv())
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(report.summary_text())
    print(f"runtime {report.runtime:.2f}s", file=sys.stderr)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="indorder", description="Independence polynomials and the root-interval order.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    graph_help = "family expression such as 'T(4,3,2)' or '3*K1', or an edge-list file"
    p = add("poly", cmd_poly, "print I(G, x)")
    p.add_argument("graph", help=graph_help)

    p = add("xi", cmd_xi, "largest real root of I(G, x)")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--prec", type=_fraction_arg, default=Fraction(1, 10 ** 12),
                   help="maximum width of the isolating interval (default 1e-12)")

    p = add("compare", cmd_compare, "compare two graphs under the order")
    p.add_argument("first", help=graph_help)
    p.add_argument("second", help=graph_help)

    p = add("convert", cmd_convert, "unit-transfer certificate turning X into Y")
    p.add_argument("x", help="non-increasing sequence such as 9,9,6,6")
    p.add_argument("y")

    p = add("enumerate", cmd_enumerate, "all trees of order N, one per line with canonical form")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["level", "pruefer"], default="level")
    p.add_argument("--out", metavar="FILE")

    p = add("starlike", cmd_starlike, "starlike trees T(n_1,...,n_k) with a given leg sum")
    p.add_argument("value", type=int, help="sum of the n_i, or the order with --by-order")
    p.add_argument("k", type=int)
    p.add_argument("--by-order", action="store_true")
    p.add_argument("--out", metavar="FILE")

    p = add("scan", cmd_scan, "run a verification suite or falsification scan")
    p.add_argument("scan", choices=sorted(SCANS))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--min-n", type=int, default=None)
    p.add_argument("--dag-max-n", type=int, default=10, help="largest order for the longest-chain search")
    p.add_argument("--max-sum", type=int, default=14, help="starlike scan: largest leg sum")
    p.add_argument("--max-k", type=int, default=6, help="starlike scan: largest number of legs")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", metavar="FILE", help="write the JSON report here")
    p.add_argument("--csv", metavar="FILE", help="write the CSV summary here")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IndOrderError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
