"""Independence polynomials with exact integer coefficients."""

from __future__ import annotations

from typing import Dict, List

import numpy as np

from .canon import canonical_form
from .errors import NotAForest, TooLarge
from .graph import (
    Graph,
    components,
    components_vertex_sets,
    delete_closed_nbhd_vertex,
    delete_vertex,
)
from .poly import ONE, X, IntPolynomial

BRUTE_FORCE_LIMIT = 24

# Shared per process.  Worker processes get their own copy, which only
# affects hit rates, never results.
_MEMO: Dict[bytes, IntPolynomial] = {}


def clear_memo() -> None:
    _MEMO.clear()


def _tree_pairs(g: Graph, verts: List[int]) -> IntPolynomial:
    root = verts[0]
    parent = {root: -1}
    order = [root]
    for v in order:  # grows while iterating: BFS order
        for u in g.adj[v]:
            if u not in parent:
                parent[u] = v
                order.append(u)
    # without[v]: sets avoiding v; with_[v]: sets containing v
    without: Dict[int, IntPolynomial] = {}
    with_: Dict[int, IntPolynomial] = {}
    for v in reversed(order):
        a, b = ONE, X
        for u in g.adj[v]:
            if parent.get(u) == v:
                a = a * (without[u] + with_[u])
                b = b * without[u]
        without[v], with_[v] = a, b
    return without[root] + with_[root]


def independence_polynomial_tree(g: Graph) -> IntPolynomial:
    """Rooted-tree DP, one pass per component."""
    if not g.is_forest():
        raise NotAForest(f"graph with n={g.n}, m={g.m} is not a forest")
    result = ONE
    for comp in components_vertex_sets(g):
        result = result * _tree_pairs(g, comp)
    return result


def _connected_poly(g: Graph) -> IntPolynomial:
    if g.m == g.n - 1:
        return _tree_pairs(g, list(range(g.n)))
    if g.is_complete():
        return IntPolynomial((1, g.n))
    key = canonical_form(g)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    degs = g.degrees()
    pivot = degs.index(max(degs))
    result = independence_polynomial(delete_vertex(g, pivot)) + independence_polynomial(
        delete_closed_nbhd_vertex(g, pivot)
    ).shift(1)
    _MEMO[key] = result
    return result


def independence_polynomial(g: Graph) -> IntPolynomial:
    """I(G, x): product over components, tree DP or vertex recursion on each."""
    result = ONE
    for comp in components(g):
        if comp.n == 0:
            continue
        result = result * _connected_poly(comp)
    return result


def brute_force_polynomial(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> IntPolynomial:
    """Count independent sets by size over all ``2**n`` vertex subsets."""
    n = g.n
    if n > limit:
        raise TooLarge(f"brute force limited to n <= {limit}, got {n}")
    if n == 0:
        return ONE
    # independent[mask]; built one top bit at a time
    independent = np.zeros(1 << n, dtype=bool)
    independent[0] = True
    size = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        low = 1 << v
        lower_nbrs = sum(1 << u for u in g.adj[v] if u < v)
        masks = np.arange(low, dtype=np.int64)
        independent[low:2 * low] = independent[:low] & ((masks & lower_nbrs) == 0)
        size[low:2 * low] = size[:low] + 1
    counts = np.bincount(size[independent], minlength=n + 1)
    return IntPolynomial(int(c) for c in counts)
