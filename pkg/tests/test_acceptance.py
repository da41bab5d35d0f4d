"""Acceptance criteria.  Each test prints one PASS/FAIL line; the lines are
also collected and repeated in the pytest terminal summary."""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple

import mpmath as mp

from indorder.errors import NotConvertible
from indorder.families import Complete, Copies, Cycle, Gn, Hnk, Path, Spider, build
from indorder.indpoly import brute_force_polynomial, clear_memo, independence_polynomial
from indorder.order import Verdict, clear_caches, compare
from indorder.poly import IntPolynomial
from indorder.roots import refine, xi
from indorder.scans import (
    THEOREM,
    clear_scan_caches,
    scan_chains,
    scan_degree_questions,
    scan_starlike,
    scan_theorems,
    scan_total_order,
)
from indorder.sequences import (
    Dom,
    Lex,
    check_adding_invariance,
    convert,
    dominance_compare,
    dominance_implies_lex_check,
    lex_compare,
    replay,
)
from indorder.trees import all_trees

from oracles import bfs_convertible, random_connected_graph

RESULTS: Dict[int, Tuple[bool, str]] = {}


def report(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def P(*cs) -> IntPolynomial:
    return IntPolynomial(cs)


def test_criterion_1_reference_polynomials():
    start = time.perf_counter()
    clear_memo()
    expected = [
        ("K2", build(Complete(2)), P(1, 2)),
        ("3K1", build(Copies(3, Complete(1))), P(1, 1) ** 3),
        ("H(6,3)", build(Hnk(6, 3)), P(1, 6, 10, 6, 1)),
        ("T(2,2,4)", build(Spider(2, 2, 4)), P(1, 6, 10, 3, 1)),
        ("T(2,3,3)", build(Spider(2, 3, 3)), P(1, 6, 10, 5)),
    ]
    bad = []
    for name, g, want in expected:
        got = independence_polynomial(g)
        if got != want:
            bad.append(f"{name}: expected {want.human()}, computed {got.human()}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1:
        bad.append(f"runtime {elapsed:.2f}s")
    report(1, not bad, "; ".join(bad) or f"5 polynomials exact in {elapsed:.3f}s")


def test_criterion_2_oracle_equivalence():
    trees = 0
    mismatches: List[str] = []
    for n in range(1, 13):
        for t in all_trees(n).trees:
            trees += 1
            if independence_polynomial(t) != brute_force_polynomial(t):
                mismatches.append(t.to_text())
    rng = random.Random(2024)
    for _ in range(500):
        g = random_connected_graph(rng, rng.randint(1, 16), rng.choice([0.05, 0.15, 0.3, 0.5]))
        if independence_polynomial(g) != brute_force_polynomial(g):
            mismatches.append(g.to_text())
    report(2, not mismatches, f"{trees} trees and 500 random connected graphs, {len(mismatches)} mismatches")


def test_criterion_3_exact_roots():
    start = time.perf_counter()
    k2, k1 = xi(build(Complete(2))), xi(build(Copies(3, Complete(1))))
    p3 = refine(xi(build(Path(3))), Fraction(1, 10 ** 9))
    golden = (-3 + mp.sqrt(5)) / 2
    inside = mp.mpf(p3.lo.numerator) / p3.lo.denominator <= golden <= mp.mpf(p3.hi.numerator) / p3.hi.denominator
    elapsed = time.perf_counter() - start
    ok = (k2.is_exact and k2.lo == Fraction(-1, 2) and k1.is_exact and k1.lo == -1
          and p3.width <= Fraction(1, 10 ** 9) and inside and elapsed < 1)
    report(3, ok, f"xi(K2)={k2.lo}, xi(3K1)={k1.lo}, xi(P3) in [{float(p3.lo):.12f}, {float(p3.hi):.12f}] "
                  f"in {elapsed:.3f}s")


def test_criterion_4_cycle_gn_equivalence():
    bad = [n for n in range(3, 31) if compare(build(Cycle(n)), build(Gn(n))).verdict != Verdict.EQUIVALENT]
    report(4, not bad, f"C_n vs G_n for 3..30, non-equivalent at {bad}")


def test_criterion_5_theorem_suite():
    r = scan_theorems(subgraph_max_n=9, star_max_n=10, sandwich_max_n=10, chains_max_n=12, dag_max_n=10)
    checked = sum(c.checked for c in r.checks)
    failed = [f"{c.name} ({c.failed})" for c in r.checks if c.failed]
    report(5, r.exit_code == 0, f"{len(r.checks)} theorem checks, {checked} instances, failures: {failed}")


def test_criterion_6_sequence_suite():
    rng = random.Random(6)
    problems = []

    def seq(n, lo, hi):
        return tuple(sorted((rng.randint(lo, hi) for _ in range(n)), reverse=True))

    for _ in range(10 ** 4):
        n = rng.randint(1, 6)
        if not dominance_implies_lex_check(seq(n, 0, 12), seq(n, 0, 12)):
            problems.append("dominance implies lex")
    for _ in range(10 ** 3):
        k = rng.randint(1, 5)
        xs, ys = [rng.randint(2, 12) for _ in range(k)], [rng.randint(2, 12) for _ in range(k)]
        if not check_adding_invariance(xs, ys, [rng.randint(2, 12) for _ in range(rng.randint(0, 3))]):
            problems.append("adding invariance")
    pairs = 0
    for n in range(1, 6):
        seqs = [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(9), n)]
        for x in seqs:
            for y in seqs:
                if sum(x) != sum(y):
                    continue
                pairs += 1
                try:
                    ok = replay(x, convert(x, y))[-1] == y
                except NotConvertible:
                    ok = False
                if ok != bfs_convertible(x, y):
                    problems.append(f"convert {x}->{y}")
    path = replay((9, 9, 6, 6), convert((9, 9, 6, 6), (10, 8, 7, 5)))
    if path[-1] != (10, 8, 7, 5):
        problems.append("(9,9,6,6) certificate")
    try:
        convert((8, 8, 4), (10, 5, 5))
        problems.append("(8,8,4) converted")
    except NotConvertible:
        pass
    if lex_compare((7, 2, 2), (5, 5, 1)) != Lex.GREATER or dominance_compare((7, 2, 2), (5, 5, 1)) != Dom.INCOMPARABLE:
        problems.append("(7,2,2)/(5,5,1)")
    report(6, not problems, f"{pairs} BFS-checked conversions, problems: {problems[:5]}")


def test_criterion_7_starlike_theorem():
    r = scan_starlike(14, max_k=6)
    thm = [c for c in r.checks if c.kind == THEOREM]
    report(7, r.clean, f"{r.totals['pairs']} pairs, {r.totals['dominance_pairs']} with dominance; "
                       + ", ".join(f"{c.name}: {c.failed}/{c.checked}" for c in thm))


def _fresh_json(fn, *args, **kwargs) -> Tuple[str, bool]:
    clear_scan_caches()
    clear_caches()
    clear_memo()
    rep = fn(*args, **kwargs)
    return rep.to_json(), rep.clean


def test_criterion_8_conjecture_scans_reproducible():
    scans = [
        ("total-order", scan_total_order, (10,), {}),
        ("chains", scan_chains, (10,), {}),
        ("starlike", scan_starlike, (14,), {}),
        ("degree-questions", scan_degree_questions, (10,), {}),
    ]
    notes = []
    ok = True
    for name, fn, args, kwargs in scans:
        a, clean_a = _fresh_json(fn, *args, **kwargs)
        b, clean_b = _fresh_json(fn, *args, **kwargs)
        same = a == b
        ok = ok and same and clean_a and clean_b
        notes.append(f"{name}: {'identical' if same else 'DIFFERENT'} ({len(a)} bytes), "
                     f"{'clean' if clean_a and clean_b else 'theorem violation'}")
    report(8, ok, "; ".join(notes))


def test_criterion_9_dual_generator_counts():
    counts = []
    ok = True
    for n in range(1, 11):
        a, b = all_trees(n, "level"), all_trees(n, "pruefer")
        same = sorted(a.index) == sorted(b.index)
        ok = ok and same and len(a) == len(b)
        counts.append(len(a))
    ok = ok and counts == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    report(9, ok, f"counts {counts}")


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
