"""Immutable simple graphs and the structural operations used throughout.

Vertices are dense 0-based integers.  Every deletion renumbers the surviving
vertices in their original order.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import NotAnEdge, ParseError, PreconditionViolated, VertexOutOfRange

Edge = Tuple[int, int]


class Graph:
    """Simple undirected graph stored as sorted adjacency tuples."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency list length must equal n")
        rows = tuple(tuple(sorted(set(int(u) for u in row))) for row in adj)
        total = 0
        for v, row in enumerate(rows):
            for u in row:
                if not 0 <= u < n:
                    raise VertexOutOfRange(f"neighbor {u} of {v} outside [0, {n})")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
            total += len(row)
        for v, row in enumerate(rows):
            for u in row:
                if v not in rows[u]:
                    raise ValueError(f"adjacency not symmetric for edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "_m", total // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge {u}-{v} outside [0, {n})")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, [()] * n)

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> List[Edge]:
        return [(v, u) for v, row in enumerate(self.adj) for u in row if v < u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> List[int]:
        return [len(row) for row in self.adj]

    def max_degree(self) -> int:
        return max((len(row) for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- predicates ---------------------------------------------------------
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_bfs_order(self, 0)) == self.n

    def is_forest(self) -> bool:
        return self.m == self.n - len(components_vertex_sets(self))

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    # -- text format --------------------------------------------------------
    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        tokens = text.split()
        if len(tokens) < 2:
            raise ParseError(text, 0, "expected header 'n m'")
        try:
            nums = [int(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(text, 0, f"non-integer token ({exc})") from None
        n, m = nums[0], nums[1]
        body = nums[2:]
        if len(body) != 2 * m:
            raise ParseError(text, len(text), f"expected {m} edge lines, got {len(body) / 2:g}")
        return cls.from_edges(n, zip(body[0::2], body[1::2]))


def _bfs_order(g: Graph, start: int, allowed=None) -> List[int]:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen and (allowed is None or u in allowed):
                seen.add(u)
                order.append(u)
                queue.append(u)
    return order


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced by ``keep``; vertices renumbered in increasing order."""
    kept = sorted(set(keep))
    index = {v: i for i, v in enumerate(kept)}
    adj = [[index[u] for u in g.adj[v] if u in index] for v in kept]
    return Graph(len(kept), adj)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")


def _check_edge(g: Graph, e: Edge) -> Tuple[int, int]:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or v not in g.adj[u]:
        raise NotAnEdge(f"{u}-{v} is not an edge")
    return u, v


def closed_neighborhood(g: Graph, v: int) -> set:
    _check_vertex(g, v)
    return set(g.adj[v]) | {v}


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def delete_closed_nbhd_vertex(g: Graph, v: int) -> Graph:
    gone = closed_neighborhood(g, v)
    return induced_subgraph(g, (u for u in range(g.n) if u not in gone))


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = _check_edge(g, e)
    adj = [list(row) for row in g.adj]
    adj[u].remove(v)
    adj[v].remove(u)
    return Graph(g.n, adj)


def delete_closed_nbhd_edge(g: Graph, e: Edge) -> Graph:
    u, v = _check_edge(g, e)
    gone = set(g.adj[u]) | set(g.adj[v]) | {u, v}
    return induced_subgraph(g, (w for w in range(g.n) if w not in gone))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = [list(row) for row in g.adj]
    adj.extend([u + shift for u in row] for row in h.adj)
    return Graph(g.n + h.n, adj)


def star_op(g: Graph, u: int, v: int, w: int) -> Graph:
    """Remove edge ``vw`` and add edge ``uw`` (the leaf-reducing move).

    Only the local conditions are checked here; whether ``v`` is a nearest
    vertex of degree at least 3 to ``u`` is the caller's business.
    """
    for x in (u, v, w):
        _check_vertex(g, x)
    if g.degree(u) != 1:
        raise PreconditionViolated("deg(u)=1", f"vertex {u} has degree {g.degree(u)}")
    if g.degree(v) < 3:
        raise PreconditionViolated("deg(v)>=3", f"vertex {v} has degree {g.degree(v)}")
    if w not in g.adj[v]:
        raise PreconditionViolated("w~v", f"{w} is not adjacent to {v}")
    if w == u:
        raise PreconditionViolated("w!=u")
    if w in g.adj[u]:
        raise PreconditionViolated("u!~w", f"{u} is already adjacent to {w}")
    adj = [list(row) for row in g.adj]
    adj[v].remove(w)
    adj[w].remove(v)
    adj[u].append(w)
    adj[w].append(u)
    return Graph(g.n, adj)


def components_vertex_sets(g: Graph) -> List[List[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if not seen[s]:
            comp = _bfs_order(g, s)
            for v in comp:
                seen[v] = True
            out.append(sorted(comp))
    return out


def components(g: Graph) -> List[Graph]:
    """Connected components ordered by their smallest vertex."""
    sets = components_vertex_sets(g)
    if len(sets) == 1:
        return [g]
    return [induced_subgraph(g, s) for s in sets]


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))


def distances_from(g: Graph, s: int) -> List[int]:
    """BFS distances; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def iter_edge_deletions(g: Graph) -> Iterator[Tuple[Edge, Graph]]:
    for e in g.edges():
        yield e, delete_edge(g, e)
