"""Verification suites and falsification scans over exhaustive tree corpora.

Every scan returns a :class:`ScanReport`.  Checks carry a kind: ``theorem``
checks must never fail (a failure means a bug), while ``conjecture``,
``question`` and ``remark`` checks are searches whose counterexamples are
reported as findings.  Reports serialize to canonical JSON, so identical
inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import TopologicalSorter
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ._version import __version__
from .canon import canonical_form
from .families import Hnk, Path, Spider, Star, Tnk, build
from .graph import Graph, degree_sequence, delete_edge, delete_vertex, distances_from, star_op
from .indpoly import independence_polynomial
from .order import OrderVerdict, Verdict, _xi_or_none, compare_polys
from .poly import IntPolynomial
from .roots import compare_roots
from .sequences import Lex, dominance_compare, dominates_d, lex_compare
from .trees import all_trees, starlike_partitions

THEOREM = "theorem"
CONJECTURE = "conjecture"
QUESTION = "question"
REMARK = "remark"

PolyPair = Tuple[IntPolynomial, IntPolynomial]


# -- report types ---------------------------------------------------------------

@dataclass
class Check:
    name: str
    kind: str
    statement: str
    checked: int = 0
    counterexamples: List[dict] = field(default_factory=list)

    def record(self, ok: bool, instance: Callable[[], dict]) -> bool:
        self.checked += 1
        if not ok:
            self.counterexamples.append(instance())
        return ok

    @property
    def failed(self) -> int:
        return len(self.counterexamples)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "statement": self.statement,
            "checked": self.checked,
            "failed": self.failed,
        }


@dataclass
class ScanReport:
    scan: str
    parameters: dict
    totals: dict = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    # wall-clock seconds; kept out of the serialized payload
    runtime: float = 0.0

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def _collect(self, theorem: bool) -> List[dict]:
        out = []
        for c in self.checks:
            if (c.kind == THEOREM) == theorem:
                out.extend({"check": c.name, **inst} for inst in c.counterexamples)
        return out

    @property
    def violations(self) -> List[dict]:
        """Counterexamples to theorem checks."""
        return self._collect(True)

    @property
    def findings(self) -> List[dict]:
        """Counterexamples to conjectures, questions and remarks."""
        return self._collect(False)

    @property
    def clean(self) -> bool:
        return not any(c.failed for c in self.checks if c.kind == THEOREM)

    @property
    def exit_code(self) -> int:
        return 0 if self.clean else 1

    def to_jsonable(self) -> dict:
        return {
            "scan": self.scan,
            "tool_version": __version__,
            "parameters": self.parameters,
            "totals": self.totals,
            "checks": [c.summary() for c in self.checks],
            "violations": self.violations,
            "findings": self.findings,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["scan", "check", "kind", "checked", "failed"])
        for c in self.checks:
            w.writerow([self.scan, c.name, c.kind, c.checked, c.failed])
        return buf.getvalue()

    def summary_text(self) -> str:
        lines = [f"scan {self.scan} (version {__version__})"]
        for key in sorted(self.totals):
            lines.append(f"  {key}: {self.totals[key]}")
        for c in self.checks:
            status = "ok" if not c.failed else ("VIOLATED" if c.kind == THEOREM else "counterexamples")
            lines.append(f"  [{c.kind}] {c.name}: {c.checked} checked, {c.failed} failed ({status})")
        lines.append("  result: " + ("clean" if self.clean else "theorem violations found"))
        return "\n".join(lines)


def merge_reports(scan: str, parts: Sequence[ScanReport]) -> ScanReport:
    """Concatenate sub-reports, prefixing check names with the sub-scan name."""
    report = ScanReport(scan, {p.scan: p.parameters for p in parts})
    for p in parts:
        report.totals[p.scan] = p.totals
        report.details[p.scan] = p.details
        for c in p.checks:
            report.checks.append(Check(f"{p.scan}/{c.name}", c.kind, c.statement, c.checked, c.counterexamples))
        report.runtime += p.runtime
    return report


# -- serialization helpers --------------------------------------------------------

def graph_record(g: Graph) -> dict:
    """Replayable description of a graph."""
    return {
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "canonical": canonical_form(g).decode("ascii"),
        "I": independence_polynomial(g).to_jsonable(),
    }


def _frac(q: Optional[Fraction]) -> Optional[str]:
    return None if q is None else str(q)


def verdict_record(v: OrderVerdict) -> dict:
    return {
        "verdict": v.verdict.value,
        "witness_first": _frac(v.witness_first),
        "witness_second": _frac(v.witness_second),
    }


def _xi_ge(pg: IntPolynomial, ph: IntPolynomial, strict: bool = False) -> bool:
    rg, rh = _xi_or_none(pg), _xi_or_none(ph)
    if rh is None:
        return rg is not None or not strict
    if rg is None:
        return False
    c = compare_roots(rg, rh)
    return c > 0 if strict else c >= 0


# -- pairwise comparison engine ---------------------------------------------------

def _compare_task(pair: PolyPair) -> OrderVerdict:
    return compare_polys(pair[0], pair[1])


def compare_many(pairs: Sequence[PolyPair], workers: int = 1) -> List[OrderVerdict]:
    """Verdicts in input order; distinct pairs are computed once, optionally in
    worker processes."""
    unique: Dict[PolyPair, int] = {}
    for p in pairs:
        unique.setdefault(p, len(unique))
    todo = list(unique)
    if workers > 1 and len(todo) >= 64:
        chunk = max(1, len(todo) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_compare_task, todo, chunksize=chunk))
    else:
        results = [compare_polys(a, b) for a, b in todo]
    return [results[unique[p]] for p in pairs]


@dataclass
class _OrderData:
    trees: List[Graph]
    polys: List[IntPolynomial]
    # verdict for (i, j), i < j, first = trees[i]
    pairs: Dict[Tuple[int, int], OrderVerdict]

    def verdict(self, i: int, j: int) -> OrderVerdict:
        if i == j:
            return OrderVerdict(Verdict.EQUIVALENT)
        if i < j:
            return self.pairs[(i, j)]
        return self.pairs[(j, i)].swapped()

    def dominates(self, i: int, j: int) -> bool:
        return self.verdict(i, j).verdict in (Verdict.EQUIVALENT, Verdict.FIRST_STRICTLY_GREATER)


_ORDER_CACHE: Dict[int, _OrderData] = {}


def tree_order_data(n: int, workers: int = 1) -> _OrderData:
    """All trees of order ``n`` with every pairwise verdict (cached per process)."""
    data = _ORDER_CACHE.get(n)
    if data is None:
        trees = all_trees(n).trees
        polys = [independence_polynomial(t) for t in trees]
        keys = [(i, j) for i in range(len(trees)) for j in range(i + 1, len(trees))]
        verdicts = compare_many([(polys[i], polys[j]) for i, j in keys], workers)
        data = _OrderData(trees, polys, dict(zip(keys, verdicts)))
        _ORDER_CACHE[n] = data
    return data


def clear_scan_caches() -> None:
    _ORDER_CACHE.clear()


def _check_domination(check: Check, xi_check: Check, first: Graph, second: Graph, context: dict) -> None:
    """``first ⪰ second`` expected, with equivalence exactly when isomorphic."""
    pf, ps = independence_polynomial(first), independence_polynomial(second)
    v = compare_polys(pf, ps)
    iso = canonical_form(first) == canonical_form(second)
    want = Verdict.EQUIVALENT if iso else Verdict.FIRST_STRICTLY_GREATER
    check.record(v.verdict == want, lambda: {
        **context, "first": graph_record(first), "second": graph_record(second),
        "expected": want.value, **verdict_record(v),
    })
    if v.verdict in (Verdict.EQUIVALENT, Verdict.FIRST_STRICTLY_GREATER):
        xi_check.record(_xi_ge(pf, ps), lambda: {
            **context, "first": graph_record(first), "second": graph_record(second),
        })


def _orders(min_n: int, max_n: int, floor: int = 1) -> List[int]:
    return list(range(max(min_n, floor), max_n + 1))


XI_STATEMENT = "G ⪰ H implies xi(G) >= xi(H)"


# -- total order ------------------------------------------------------------------

def scan_total_order(max_n: int, min_n: int = 1, workers: int = 1) -> ScanReport:
    report = ScanReport("total-order", {"min_n": min_n, "max_n": max_n})
    total = Check("total-order", CONJECTURE, "any two trees of the same order are comparable")
    xi_check = Check("xi-monotonicity", THEOREM, XI_STATEMENT)
    trans = Check("transitivity", THEOREM, "a ⪰ b and b ⪰ c imply a ⪰ c")
    report.checks = [total, xi_check, trans]
    per_order = {}
    for n in _orders(min_n, max_n):
        data = tree_order_data(n, workers)
        N = len(data.trees)
        counts = {v.value: 0 for v in Verdict}
        for (i, j), v in sorted(data.pairs.items()):
            counts[v.verdict.value] += 1
            total.record(v.verdict != Verdict.INCOMPARABLE, lambda i=i, j=j, v=v: {
                "n": n, "first": graph_record(data.trees[i]), "second": graph_record(data.trees[j]),
                **verdict_record(v),
            })
            if v.verdict in (Verdict.FIRST_STRICTLY_GREATER, Verdict.SECOND_STRICTLY_GREATER):
                a, b = (i, j) if v.verdict == Verdict.FIRST_STRICTLY_GREATER else (j, i)
                xi_check.record(_xi_ge(data.polys[a], data.polys[b]), lambda a=a, b=b: {
                    "n": n, "first": graph_record(data.trees[a]), "second": graph_record(data.trees[b]),
                })
        # down[a] = bitmask of everything a dominates
        down = [sum(1 << j for j in range(N) if data.dominates(a, j)) for a in range(N)]
        for a in range(N):
            for b in range(N):
                if a != b and down[a] >> b & 1:
                    extra = down[b] & ~down[a]
                    trans.record(extra == 0, lambda a=a, b=b, extra=extra: {
                        "n": n, "a": graph_record(data.trees[a]), "b": graph_record(data.trees[b]),
                        "c": graph_record(data.trees[(extra & -extra).bit_length() - 1]),
                    })
        per_order[str(n)] = {
            "trees": N,
            "pairs": len(data.pairs),
            "equivalent": counts[Verdict.EQUIVALENT.value],
            "comparable_strict": counts[Verdict.FIRST_STRICTLY_GREATER.value]
            + counts[Verdict.SECOND_STRICTLY_GREATER.value],
            "incomparable": counts[Verdict.INCOMPARABLE.value],
        }
    report.details["per_order"] = per_order
    report.totals = {
        key: sum(row[key] for row in per_order.values())
        for key in ("trees", "pairs", "equivalent", "comparable_strict", "incomparable")
    }
    return report


# -- sandwich -----------------------------------------------------------------------

def scan_sandwich(max_n: int, min_n: int = 2, workers: int = 1) -> ScanReport:
    report = ScanReport("sandwich", {"min_n": max(min_n, 2), "max_n": max_n})
    upper = Check("H(n,k) ⪰ T", THEOREM, "H(n,k) ⪰ T ⪰ T(n,k), left side; equivalence iff T = H(n,k)")
    lower = Check("T ⪰ T(n,k)", THEOREM, "H(n,k) ⪰ T ⪰ T(n,k), right side; equivalence iff T = T(n,k)")
    star = Check("S_n ⪰ T", THEOREM, "S_n ⪰ T with equivalence iff T = S_n")
    path = Check("T ⪰ P_n", THEOREM, "T ⪰ P_n with equivalence iff T = P_n")
    xi_check = Check("xi-monotonicity", THEOREM, XI_STATEMENT)
    report.checks = [upper, lower, star, path, xi_check]
    trees_seen = 0
    for n in _orders(min_n, max_n, floor=2):
        s_n, p_n = build(Star(n)), build(Path(n))
        for t in all_trees(n).trees:
            trees_seen += 1
            k = t.max_degree()
            ctx = {"n": n, "k": k}
            _check_domination(upper, xi_check, build(Hnk(n, k)), t, ctx)
            _check_domination(lower, xi_check, t, build(Tnk(n, k)), ctx)
            _check_domination(star, xi_check, s_n, t, ctx)
            _check_domination(path, xi_check, t, p_n, ctx)
    report.totals = {"trees": trees_seen, "comparisons": 4 * trees_seen}
    return report


# -- subgraph domination ----------------------------------------------------------

def scan_subgraph(max_n: int, min_n: int = 1, workers: int = 1) -> ScanReport:
    report = ScanReport("subgraph", {"min_n": min_n, "max_n": max_n})
    sub = Check("G ≻ H", THEOREM, "a proper subgraph H of G satisfies G ≻ H")
    xi_check = Check("xi-monotonicity", THEOREM, "H a subgraph of G implies xi(G) >= xi(H)")
    xi_strict = Check("xi-strict", THEOREM, "G connected and H a proper subgraph imply xi(G) > xi(H)")
    report.checks = [sub, xi_check, xi_strict]
    jobs: List[Tuple[Graph, Graph, dict]] = []
    for n in _orders(min_n, max_n):
        for t in all_trees(n).trees:
            for v in range(t.n):
                jobs.append((t, delete_vertex(t, v), {"deleted_vertex": v}))
            for e in t.edges():
                jobs.append((t, delete_edge(t, e), {"deleted_edge": list(e)}))
    polys = [(independence_polynomial(g), independence_polynomial(h)) for g, h, _ in jobs]
    verdicts = compare_many(polys, workers)
    for (g, h, what), (pg, ph), v in zip(jobs, polys, verdicts):
        def inst(g=g, h=h, what=what, v=v):
            return {"graph": graph_record(g), "subgraph": graph_record(h), **what, **verdict_record(v)}
        sub.record(v.verdict == Verdict.FIRST_STRICTLY_GREATER, inst)
        xi_check.record(_xi_ge(pg, ph), inst)
        xi_strict.record(_xi_ge(pg, ph, strict=True), inst)
    report.totals = {"pairs": len(jobs)}
    return report


# -- star operation ----------------------------------------------------------------

def nearest_branch_vertices(g: Graph, u: int) -> List[int]:
    """Vertices of degree >= 3 at minimum distance from ``u`` (all ties)."""
    dist = distances_from(g, u)
    high = [v for v in range(g.n) if g.degree(v) >= 3 and dist[v] >= 0]
    if not high:
        return []
    best = min(dist[v] for v in high)
    return [v for v in high if dist[v] == best]


def admissible_triples(g: Graph) -> List[Tuple[int, int, int]]:
    """Every ``(u, v, w)`` allowed by the ⋆ definition, ties included."""
    out = []
    for u in range(g.n):
        if g.degree(u) != 1:
            continue
        for v in nearest_branch_vertices(g, u):
            for w in g.adj[v]:
                if w != u and w not in g.adj[u]:
                    out.append((u, v, w))
    return out


def guided_star_op(g: Graph, u: int) -> Graph:
    """⋆ at leaf ``u`` with the lowest-index nearest branch vertex ``v`` and the
    lowest-index admissible neighbour ``w`` off the ``u``-``v`` path."""
    cands = nearest_branch_vertices(g, u)
    if g.degree(u) != 1 or not cands:
        raise ValueError(f"no admissible star move at vertex {u}")
    v = cands[0]
    dist = distances_from(g, u)
    for w in g.adj[v]:
        if w != u and w not in g.adj[u] and dist[w] > dist[v]:
            return star_op(g, u, v, w)
    raise ValueError(f"no admissible neighbour of {v}")


def scan_star_op(max_n: int, min_n: int = 1, workers: int = 1) -> ScanReport:
    report = ScanReport("star-op", {"min_n": min_n, "max_n": max_n, "ties": "all nearest branch vertices"})
    mono = Check("G ⪰ G*", THEOREM, "G ⪰ G* for every admissible star move")
    leaves = Check("leaf count", THEOREM, "G* has exactly one vertex of degree 1 fewer than G")
    size = Check("order and size", THEOREM, "G* has the order and size of G")
    xi_check = Check("xi-monotonicity", THEOREM, XI_STATEMENT)
    report.checks = [mono, leaves, size, xi_check]
    jobs = []
    for n in _orders(min_n, max_n):
        for t in all_trees(n).trees:
            for u, v, w in admissible_triples(t):
                jobs.append((t, star_op(t, u, v, w), [u, v, w]))
    polys = [(independence_polynomial(g), independence_polynomial(h)) for g, h, _ in jobs]
    verdicts = compare_many(polys, workers)
    non_tree = 0
    for (g, h, uvw), (pg, ph), v in zip(jobs, polys, verdicts):
        def inst(g=g, h=h, uvw=uvw, v=v):
            return {"graph": graph_record(g), "triple": uvw, "result": graph_record(h), **verdict_record(v)}
        non_tree += not h.is_tree()
        ok = v.verdict in (Verdict.EQUIVALENT, Verdict.FIRST_STRICTLY_GREATER)
        mono.record(ok, inst)
        n_leaves = lambda x: sum(1 for d in x.degrees() if d == 1)
        leaves.record(n_leaves(h) == n_leaves(g) - 1, inst)
        size.record(h.n == g.n and h.m == g.m, inst)
        if ok:
            xi_check.record(_xi_ge(pg, ph), inst)
    report.totals = {"moves": len(jobs), "non_tree_results": non_tree}
    return report


# -- chains -------------------------------------------------------------------------

def longest_chain(data: _OrderData) -> List[int]:
    """Indices (one per I-equivalence class) of a longest strict chain,
    greatest element first."""
    rep: Dict[IntPolynomial, int] = {}
    for i, p in enumerate(data.polys):
        rep.setdefault(p, i)
    nodes = sorted(rep.values())
    # predecessors in the sorter = strictly dominated classes
    below = {a: [b for b in nodes if b != a and data.verdict(a, b).verdict == Verdict.FIRST_STRICTLY_GREATER]
             for a in nodes}
    best: Dict[int, List[int]] = {}
    for a in TopologicalSorter(below).static_order():
        tail = max((best[b] for b in below[a]), key=lambda c: (len(c), [-x for x in c]), default=[])
        best[a] = [a] + tail
    return max(best.values(), key=lambda c: (len(c), [-x for x in c]))


def scan_chains(max_n: int, min_n: int = 3, dag_max_n: int = 10, workers: int = 1) -> ScanReport:
    report = ScanReport("chains", {"min_n": max(min_n, 3), "max_n": max_n, "dag_max_n": dag_max_n})
    t_chain = Check("T(n,k) chain", THEOREM, "T(n,n-1) ≻ T(n,n-2) ≻ ... ≻ T(n,2)")
    h_chain = Check("H(n,k) chain", THEOREM, "H(n,n-1) ≻ H(n,n-2) ≻ ... ≻ H(n,ceil(n/2))")
    exists = Check("chain of length n-2", THEOREM, "the longest chain of trees of order n has length >= n-2")
    bound = Check("chain length bound", CONJECTURE, "every chain of trees of order n has length <= n-2")
    report.checks = [t_chain, h_chain, exists, bound]
    per_order = {}
    for n in _orders(min_n, max_n, floor=3):
        for k in range(n - 1, 2, -1):
            a, b = build(Tnk(n, k)), build(Tnk(n, k - 1))
            v = compare_polys(independence_polynomial(a), independence_polynomial(b))
            t_chain.record(v.verdict == Verdict.FIRST_STRICTLY_GREATER, lambda a=a, b=b, v=v, k=k: {
                "n": n, "k": k, "first": graph_record(a), "second": graph_record(b), **verdict_record(v),
            })
        for k in range(n - 1, (n + 1) // 2, -1):
            a, b = build(Hnk(n, k)), build(Hnk(n, k - 1))
            v = compare_polys(independence_polynomial(a), independence_polynomial(b))
            h_chain.record(v.verdict == Verdict.FIRST_STRICTLY_GREATER, lambda a=a, b=b, v=v, k=k: {
                "n": n, "k": k, "first": graph_record(a), "second": graph_record(b), **verdict_record(v),
            })
        if n > dag_max_n:
            continue
        data = tree_order_data(n, workers)
        chain = longest_chain(data)
        length = len(chain)
        row = {
            "trees": len(data.trees),
            "classes": len(set(data.polys)),
            "longest_chain": length,
            "n_minus_2": n - 2,
            "chain": [canonical_form(data.trees[i]).decode("ascii") for i in chain],
        }
        per_order[str(n)] = row
        exists.record(length >= n - 2, lambda row=row: {"n": n, **row})
        bound.record(length <= n - 2, lambda row=row: {"n": n, **row})
    report.details["per_order"] = per_order
    report.totals = {
        "orders_with_dag": len(per_order),
        "orders_at_bound": sum(1 for r in per_order.values() if r["longest_chain"] == r["n_minus_2"]),
    }
    return report


# -- starlike trees -----------------------------------------------------------------

def scan_starlike(max_sum: int, max_k: int = 6, min_k: int = 3, min_sum: int = 1, workers: int = 1) -> ScanReport:
    """All ordered pairs ``N`` lex-greater than ``M`` among partitions of the
    same total into ``k`` parts >= 2; the graph verdict compares ``T(M)``
    (first) with ``T(N)`` (second)."""
    report = ScanReport("starlike", {"min_sum": min_sum, "max_sum": max_sum, "min_k": min_k, "max_k": max_k})
    main = Check("dominance implies order", THEOREM, "N ⪰_d M implies T(M) ⪰ T(N), strictly when N ≻_d M")
    xi_cor = Check("dominance implies xi order", THEOREM, "N ⪰_d M implies xi(T(M)) >= xi(T(N))")
    distinct = Check("dominance separates polynomials", THEOREM, "N ≻_d M implies I(T(N)) != I(T(M))")
    conj = Check("lex iff order", CONJECTURE, "N ≻ M lexicographically iff T(M) ≻ T(N)")
    report.checks = [main, xi_cor, distinct, conj]
    jobs = []
    for k in range(min_k, max_k + 1):
        for total in range(max(min_sum, 2 * k), max_sum + 1):
            parts = starlike_partitions(total, k)
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    jobs.append((k, total, parts[i], parts[j]))
    trees = {p: build(Spider(*p)) for _, _, a, b in jobs for p in (a, b)}
    polys = [(independence_polynomial(trees[m]), independence_polynomial(trees[nn])) for _, _, nn, m in jobs]
    verdicts = compare_many(polys, workers)
    dom_pairs = 0
    for (k, total, N, M), (pm, pn), v in zip(jobs, polys, verdicts):
        assert lex_compare(N, M) == Lex.GREATER
        dom = dominance_compare(N, M).value

        def inst(k=k, total=total, N=N, M=M, v=v, dom=dom):
            return {"k": k, "sum": total, "order": total - k + 1, "N": list(N), "M": list(M),
                    "dominance": dom, "first": graph_record(trees[M]), "second": graph_record(trees[N]),
                    **verdict_record(v)}
        strict = v.verdict == Verdict.FIRST_STRICTLY_GREATER
        if dominates_d(N, M):
            dom_pairs += 1
            main.record(strict, inst)
            xi_cor.record(_xi_ge(pm, pn), inst)
            distinct.record(pm != pn, inst)
        conj.record(strict, inst)
    report.totals = {"pairs": len(jobs), "dominance_pairs": dom_pairs, "trees": len(trees)}
    return report


# -- degree-sequence questions ----------------------------------------------------

def scan_degree_questions(max_n: int, min_n: int = 1, workers: int = 1) -> ScanReport:
    report = ScanReport("degree-questions", {"min_n": min_n, "max_n": max_n})
    q1 = Check("degree lex implies order", QUESTION, "D(T1) ≻ D(T2) lexicographically implies T1 ≻ T2")
    q2 = Check("equal polynomials imply equal degrees", QUESTION, "I(T1) = I(T2) implies D(T1) = D(T2)")
    rem = Check("extremal degree sequences", REMARK,
                "T != H(n,k), T(n,k) of maximum degree k has D(H(n,k)) ≻ D(T) ≻ D(T(n,k))")
    report.checks = [q1, q2, rem]
    for n in _orders(min_n, max_n):
        data = tree_order_data(n, workers)
        degs = [degree_sequence(t) for t in data.trees]
        for (i, j), v in sorted(data.pairs.items()):
            lx = lex_compare(degs[i], degs[j])

            def inst(i=i, j=j, v=v):
                return {"n": n, "first": graph_record(data.trees[i]), "second": graph_record(data.trees[j]),
                        "D_first": list(degs[i]), "D_second": list(degs[j]), **verdict_record(v)}
            if lx == Lex.GREATER:
                q1.record(v.verdict == Verdict.FIRST_STRICTLY_GREATER, inst)
            elif lx == Lex.LESS:
                q1.record(v.verdict == Verdict.SECOND_STRICTLY_GREATER, inst)
            if data.polys[i] == data.polys[j]:
                q2.record(degs[i] == degs[j], inst)
        for t, d in zip(data.trees, degs):
            k = t.max_degree()
            if n < 2:
                continue
            h, low = build(Hnk(n, k)), build(Tnk(n, k))
            cf = canonical_form(t)
            if cf in (canonical_form(h), canonical_form(low)):
                continue
            dh, dl = degree_sequence(h), degree_sequence(low)
            rem.record(lex_compare(dh, d) == Lex.GREATER and lex_compare(d, dl) == Lex.GREATER,
                       lambda t=t, d=d, dh=dh, dl=dl, k=k: {
                           "n": n, "k": k, "tree": graph_record(t),
                           "D_tree": list(d), "D_H": list(dh), "D_T": list(dl)})
    report.totals = {c.name: c.checked for c in report.checks}
    return report


# -- aggregate theorem suite --------------------------------------------------------

def scan_theorems(subgraph_max_n: int = 9, star_max_n: int = 10, sandwich_max_n: int = 10,
                  chains_max_n: int = 12, dag_max_n: int = 10, workers: int = 1) -> ScanReport:
    parts = [
        scan_subgraph(subgraph_max_n, workers=workers),
        scan_star_op(star_max_n, workers=workers),
        scan_sandwich(sandwich_max_n, workers=workers),
        scan_chains(chains_max_n, dag_max_n=dag_max_n, workers=workers),
    ]
    for p in parts[-1:]:
        # the chain-length bound is a conjecture; keep only theorem checks here
        p.checks = [c for c in p.checks if c.kind == THEOREM]
    return merge_reports("theorems", parts)


SCANS = {
    "total-order": scan_total_order,
    "sandwich": scan_sandwich,
    "chains": scan_chains,
    "starlike": scan_starlike,
    "degree-questions": scan_degree_questions,
    "subgraph": scan_subgraph,
    "star-op": scan_star_op,
    "theorems": scan_theorems,
}
