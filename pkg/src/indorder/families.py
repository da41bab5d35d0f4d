"""Named graph families and a small text DSL for them.

Vertex numbering is fixed so that outputs are reproducible:

* ``Path(n)``: ``0 - 1 - ... - n-1``.
* ``Star(n)`` (= K_{1,n-1}): centre 0.
* ``Cycle(n)``: the path plus ``(n-1, 0)``.
* ``Gn(n)``: the path plus ``(n-3, n-1)``; same independence polynomial as C_n.
* ``Spider(n1, ..., nk)``: legs sorted non-increasingly, centre 0, then the
  legs leg by leg, each starting next to the centre.  Leg ``i`` has
  ``n_i - 1`` vertices.
* ``Tnk(n, k)`` = ``Spider(n-k+1, 2, ..., 2)`` with ``k-1`` twos.
* ``Hnk(n, k)``: adjacent centres 0 and 1 carrying ``k-1`` and ``n-k-1``
  leaves respectively (leaves of 0 first).

DSL examples: ``P10``, ``S7``, ``K5``, ``K3,4``, ``C12``, ``G12``,
``T(4,3,2)``, ``Tnk(10,4)``, ``H(9,4)``, ``P2+P3``, ``3*K1``, ``2*(P2+K1)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Tuple, Union

from .errors import InvalidFamilyParameters, ParseError
from .graph import Graph, disjoint_union


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Gn:
    n: int


@dataclass(frozen=True)
class Spider:
    legs: Tuple[int, ...]

    def __init__(self, *legs):
        if len(legs) == 1 and isinstance(legs[0], (tuple, list)):
            legs = tuple(legs[0])
        object.__setattr__(self, "legs", tuple(sorted((int(x) for x in legs), reverse=True)))


@dataclass(frozen=True)
class Tnk:
    n: int
    k: int


@dataclass(frozen=True)
class Hnk:
    n: int
    k: int


@dataclass(frozen=True)
class DisjointUnion:
    parts: Tuple["FamilySpec", ...]


@dataclass(frozen=True)
class Copies:
    r: int
    spec: "FamilySpec"


FamilySpec = Union[Path, Star, Complete, CompleteBipartite, Cycle, Gn, Spider, Tnk, Hnk, DisjointUnion, Copies]


def _path_edges(start: int, length: int) -> List[Tuple[int, int]]:
    return [(start + i, start + i + 1) for i in range(length - 1)]


def _spider(legs: Tuple[int, ...]) -> Graph:
    n = sum(legs) - len(legs) + 1
    edges = []
    nxt = 1
    for leg in legs:
        size = leg - 1
        if size:
            edges.append((0, nxt))
            edges.extend(_path_edges(nxt, size))
        nxt += size
    return Graph.from_edges(n, edges)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidFamilyParameters(msg)


def build(spec: FamilySpec) -> Graph:
    if isinstance(spec, Path):
        _require(spec.n >= 1, "Path needs n >= 1")
        return Graph.from_edges(spec.n, _path_edges(0, spec.n))
    if isinstance(spec, Star):
        _require(spec.n >= 1, "Star needs n >= 1")
        return Graph.from_edges(spec.n, [(0, i) for i in range(1, spec.n)])
    if isinstance(spec, Complete):
        _require(spec.n >= 1, "Complete needs n >= 1")
        return Graph.from_edges(spec.n, [(i, j) for i in range(spec.n) for j in range(i + 1, spec.n)])
    if isinstance(spec, CompleteBipartite):
        _require(spec.m >= 1 and spec.n >= 1, "CompleteBipartite needs both parts >= 1")
        a, b = spec.m, spec.n
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if isinstance(spec, Cycle):
        _require(spec.n >= 3, "Cycle needs n >= 3")
        return Graph.from_edges(spec.n, _path_edges(0, spec.n) + [(spec.n - 1, 0)])
    if isinstance(spec, Gn):
        _require(spec.n >= 3, "Gn needs n >= 3")
        return Graph.from_edges(spec.n, _path_edges(0, spec.n) + [(spec.n - 3, spec.n - 1)])
    if isinstance(spec, Spider):
        _require(len(spec.legs) >= 1, "Spider needs at least one leg")
        _require(all(x >= 2 for x in spec.legs), f"Spider legs must be >= 2, got {spec.legs}")
        return _spider(spec.legs)
    if isinstance(spec, Tnk):
        _require(spec.n >= spec.k >= 1, f"Tnk needs n >= k >= 1, got ({spec.n},{spec.k})")
        if spec.n == 1:
            return Graph.empty(1)
        return _spider((spec.n - spec.k + 1,) + (2,) * (spec.k - 1))
    if isinstance(spec, Hnk):
        n, k = spec.n, spec.k
        _require(n >= 2 and 1 <= k <= n - 1, f"Hnk needs n >= 2 and 1 <= k <= n-1, got ({n},{k})")
        edges = [(0, 1)]
        edges += [(0, i) for i in range(2, k + 1)]
        edges += [(1, i) for i in range(k + 1, n)]
        return Graph.from_edges(n, edges)
    if isinstance(spec, DisjointUnion):
        g = Graph.empty(0)
        for part in spec.parts:
            g = disjoint_union(g, build(part))
        return g
    if isinstance(spec, Copies):
        _require(spec.r >= 0, "Copies needs r >= 0")
        one = build(spec.spec)
        g = Graph.empty(0)
        for _ in range(spec.r):
            g = disjoint_union(g, one)
        return g
    raise InvalidFamilyParameters(f"unknown family spec {spec!r}")


# -- DSL ----------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.s = text.replace(" ", "")
        self.i = 0

    def error(self, msg: str):
        raise ParseError(self.text, self.i, msg)

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def eat(self, tok: str) -> bool:
        if self.s.startswith(tok, self.i):
            self.i += len(tok)
            return True
        return False

    def expect(self, tok: str) -> None:
        if not self.eat(tok):
            self.error(f"expected {tok!r}")

    def integer(self) -> int:
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.error("expected integer")
        return int(self.s[j:self.i])

    def int_list(self) -> List[int]:
        self.expect("(")
        vals = [self.integer()]
        while self.eat(","):
            vals.append(self.integer())
        self.expect(")")
        return vals

    def expr(self) -> FamilySpec:
        parts = [self.term()]
        while self.eat("+"):
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else DisjointUnion(tuple(parts))

    def term(self) -> FamilySpec:
        if self.peek().isdigit():
            r = self.integer()
            self.expect("*")
            return Copies(r, self.atom())
        return self.atom()

    def atom(self) -> FamilySpec:
        if self.eat("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if self.eat("Tnk"):
            vals = self.int_list()
            if len(vals) != 2:
                self.error("Tnk takes two arguments")
            return Tnk(*vals)
        if self.eat("T"):
            return Spider(*self.int_list())
        if self.eat("H"):
            vals = self.int_list()
            if len(vals) != 2:
                self.error("H takes two arguments")
            return Hnk(*vals)
        if self.eat("K"):
            a = self.integer()
            # "K3,4" is bipartite only when the comma is followed by a digit
            if self.peek() == "," and self.i + 1 < len(self.s) and self.s[self.i + 1].isdigit():
                self.i += 1
                return CompleteBipartite(a, self.integer())
            return Complete(a)
        for letter, cls in (("P", Path), ("S", Star), ("C", Cycle), ("G", Gn)):
            if self.eat(letter):
                return cls(self.integer())
        self.error("unknown family")
        raise AssertionError  # unreachable


def parse_family(text: str) -> FamilySpec:
    p = _Parser(text)
    if not p.s:
        p.error("empty family expression")
    spec = p.expr()
    if p.i != len(p.s):
        p.error("trailing input")
    return spec


def graph_from_arg(arg: str) -> Graph:
    """Build a graph from a DSL expression or an edge-list file path."""
    if os.path.isfile(arg):
        with open(arg) as fh:
            return Graph.from_text(fh.read())
    return build(parse_family(arg))
