"""Exact isomorphism-invariant encodings of graphs.

Forests use centroid-rooted AHU strings.  Other graphs use an
individualization-refinement search: colour refinement to a stable
partition, then branch on the first non-singleton cell, keeping the
smallest relabelled edge list over all leaves.  Twin vertices in the target
cell are explored only once (swapping twins is an automorphism that fixes
the current colouring), which keeps cliques and complete bipartite graphs
cheap.  Worst case is still exponential.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .graph import Graph, components_vertex_sets

Adj = Tuple[Tuple[int, ...], ...]


def _centroids(adj: Sequence[Sequence[int]], verts: Sequence[int]) -> List[int]:
    root = verts[0]
    size = len(verts)
    parent = {root: -1}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                order.append(u)
                queue.append(u)
    sub = {v: 1 for v in order}
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            sub[p] += sub[v]
    best: List[int] = []
    best_w = size + 1
    for v in order:
        w = size - sub[v]
        for u in adj[v]:
            if parent.get(u) == v:
                w = max(w, sub[u])
        if w < best_w:
            best, best_w = [v], w
        elif w == best_w:
            best.append(v)
    return best


def rooted_ahu(adj: Sequence[Sequence[int]], root: int, blocked: int = -1) -> str:
    """AHU parenthesis string of the subtree at ``root`` (``blocked`` is cut off)."""
    parent = {root: blocked}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u != parent[v] and u not in parent:
                parent[u] = v
                order.append(u)
                queue.append(u)
    kids: dict = {v: [] for v in order}
    code = {}
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(kids[v])) + ")"
        p = parent[v]
        if p in kids:
            kids[p].append(code[v])
    return code[root]


def tree_code(adj: Sequence[Sequence[int]], verts: Sequence[int]) -> str:
    cents = _centroids(adj, verts)
    if len(cents) == 1:
        return rooted_ahu(adj, cents[0])
    a, b = cents
    # bicentroidal: encode the central edge explicitly so it cannot collide
    # with a unicentroidal code
    halves = sorted([rooted_ahu(adj, a, blocked=b), rooted_ahu(adj, b, blocked=a)])
    return "[" + halves[0] + halves[1] + "]"


def forest_code(g: Graph) -> str:
    return ".".join(sorted(tree_code(g.adj, comp) for comp in components_vertex_sets(g)))


# -- general graphs ---------------------------------------------------------

def _refine(adj: Adj, colors: List[int]) -> List[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        k = len(rank)
        if k == ncolors:
            return new
        colors, ncolors = new, k


def _certificate(adj: Adj, colors: List[int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(
        (min(colors[v], colors[u]), max(colors[v], colors[u]))
        for v in range(len(adj)) for u in adj[v] if v < u
    ))


def _are_twins(adj: Adj, u: int, v: int) -> bool:
    nu = set(adj[u])
    nv = set(adj[v])
    nu.discard(v)
    nv.discard(u)
    return nu == nv


def _search(adj: Adj, colors: List[int], best: List[Optional[tuple]]) -> None:
    n = len(adj)
    cells: dict = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    if len(cells) == n:
        cert = _certificate(adj, colors)
        if best[0] is None or cert < best[0]:
            best[0] = cert
        return
    target_color = min(c for c, vs in cells.items() if len(vs) > 1)
    tried: List[int] = []
    for v in cells[target_color]:
        if any(_are_twins(adj, v, t) for t in tried):
            continue
        tried.append(v)
        indiv = [2 * c + (0 if w == v else 1) if c == target_color else 2 * c for w, c in enumerate(colors)]
        _search(adj, _refine(adj, indiv), best)


def general_certificate(g: Graph) -> Tuple[Tuple[int, int], ...]:
    if g.n == 0:
        return ()
    best: List[Optional[tuple]] = [None]
    _search(g.adj, _refine(g.adj, [0] * g.n), best)
    return best[0]  # type: ignore[return-value]


@lru_cache(maxsize=65536)
def _canonical_form_cached(g: Graph) -> bytes:
    if g.is_forest():
        return b"F%d:" % g.n + forest_code(g).encode()
    cert = general_certificate(g)
    body = ",".join(f"{a}-{b}" for a, b in cert)
    return b"G%d:" % g.n + body.encode()


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string; equal iff the graphs are isomorphic."""
    return _canonical_form_cached(g)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
