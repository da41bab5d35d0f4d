"""Exhaustive generation of free trees and starlike trees."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Sequence, Tuple

from .canon import canonical_form
from .errors import InvalidFamilyParameters, NotATree, NotStarlike, TooLarge
from .families import Path, Spider, build
from .graph import Graph

TREE_LIMIT = 14

# OEIS A000055, used only to sanity-check generator output
KNOWN_FREE_TREE_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106,
    11: 235, 12: 551, 13: 1301, 14: 3159, 15: 7741, 16: 19320,
}


@dataclass
class TreeCorpus:
    order: int
    trees: List[Graph]
    index: Dict[bytes, int] = field(default_factory=dict)

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def position(self, g: Graph) -> int:
        return self.index[canonical_form(g)]


# -- level sequences ----------------------------------------------------------

def rooted_level_sequences(n: int) -> Iterator[List[int]]:
    """Canonical level sequences of all rooted trees on ``n`` vertices
    (Beyer-Hedetniemi successor rule, root at level 1)."""
    if n < 1:
        return
    L = list(range(1, n + 1))
    while True:
        yield list(L)
        p = n - 1
        while p >= 0 and L[p] <= 2:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        for i in range(p, n):
            L[i] = L[i - (p - q)]


def _parents(levels: Sequence[int]) -> List[int]:
    parent = [-1] * len(levels)
    last_at: Dict[int, int] = {}
    for i, lv in enumerate(levels):
        if i:
            parent[i] = last_at[lv - 1]
        last_at[lv] = i
    return parent


def _branch_sizes(levels: Sequence[int]) -> List[int]:
    """Sizes of the subtrees hanging from the root."""
    sizes: List[int] = []
    for lv in levels[1:]:
        if lv == 2:
            sizes.append(1)
        else:
            sizes[-1] += 1
    return sizes


def _edges_from_levels(levels: Sequence[int], offset: int = 0) -> List[Tuple[int, int]]:
    return [(p + offset, i + offset) for i, p in enumerate(_parents(levels)) if p >= 0]


def free_trees_level(n: int) -> List[Graph]:
    """Every free tree once, by rooting at the centroid.

    A tree with one centroid is a rooted tree whose root branches all have
    fewer than ``n/2`` vertices.  A tree with two centroids is an unordered
    pair of rooted trees on ``n/2`` vertices joined at their roots.
    """
    if n == 1:
        return [Graph.empty(1)]
    out = []
    for L in rooted_level_sequences(n):
        if all(2 * s < n for s in _branch_sizes(L)):
            out.append(Graph.from_edges(n, _edges_from_levels(L)))
    if n % 2 == 0:
        half = n // 2
        rooted = list(rooted_level_sequences(half))
        for i in range(len(rooted)):
            for j in range(i, len(rooted)):
                edges = _edges_from_levels(rooted[i]) + _edges_from_levels(rooted[j], half)
                edges.append((0, half))
                out.append(Graph.from_edges(n, edges))
    return out


# -- Pruefer sequences ------------------------------------------------------

def _pruefer_decode(seq: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def _partitions(total: int, max_part: int, max_len: int) -> Iterator[List[int]]:
    if total == 0:
        yield []
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield [first] + rest


def _multiset_words(counts: List[int]) -> Iterator[List[int]]:
    total = sum(counts)
    word: List[int] = []

    def rec() -> Iterator[List[int]]:
        if len(word) == total:
            yield list(word)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                word.append(sym)
                yield from rec()
                word.pop()
                counts[sym] += 1

    yield from rec()


def pruefer_sequences_degree_sorted(n: int) -> Iterator[List[int]]:
    """Pruefer sequences in which vertex ``v`` occurs at least as often as ``v+1``.

    Vertex ``v`` of the decoded tree has degree ``1 + count(v)``, and every
    tree can be relabelled so degrees are non-increasing in the label, so
    this subset still meets every isomorphism class.
    """
    for part in _partitions(n - 2, n - 2, n):
        yield from _multiset_words(list(part))


def free_trees_pruefer(n: int) -> List[Graph]:
    """Labelled generation plus canonical-form deduplication (slow oracle)."""
    if n == 1:
        return [Graph.empty(1)]
    if n == 2:
        return [Graph.from_edges(2, [(0, 1)])]
    seen: Dict[bytes, Graph] = {}
    for seq in pruefer_sequences_degree_sorted(n):
        g = _pruefer_decode(seq, n)
        seen.setdefault(canonical_form(g), g)
    return list(seen.values())


def all_trees(n: int, method: str = "level", limit: int = TREE_LIMIT) -> TreeCorpus:
    """All non-isomorphic trees of order ``n`` sorted by canonical form."""
    if n < 1:
        raise InvalidFamilyParameters("tree order must be >= 1")
    if n > limit:
        raise TooLarge(f"tree enumeration limited to n <= {limit}, got {n}")
    if method == "level":
        trees = free_trees_level(n)
    elif method == "pruefer":
        trees = free_trees_pruefer(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    keyed = sorted(((canonical_form(t), t) for t in trees), key=lambda kt: kt[0])
    index = {k: i for i, (k, _) in enumerate(keyed)}
    if len(index) != len(keyed):
        raise AssertionError(f"duplicate trees produced for n={n}")
    return TreeCorpus(n, [t for _, t in keyed], index)


# -- starlike trees -------------------------------------------------------------

def starlike_partitions(total: int, k: int) -> List[Tuple[int, ...]]:
    """Partitions of ``total`` into exactly ``k`` parts, each >= 2, lex-decreasing."""
    out: List[Tuple[int, ...]] = []

    def rec(remaining: int, parts_left: int, max_part: int, acc: List[int]) -> None:
        if parts_left == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        hi = min(max_part, remaining - 2 * (parts_left - 1))
        for part in range(hi, 1, -1):
            acc.append(part)
            rec(remaining - part, parts_left - 1, part, acc)
            acc.pop()

    rec(total, k, total, [])
    return out


def all_starlike(total: int, k: int) -> List[Graph]:
    """Trees ``T(n_1, ..., n_k)`` with ``sum(n_i) == total``.

    The tree order is ``total - k + 1``.  For ``k`` in ``{1, 2}`` every such
    tree is the same path, returned once.
    """
    if k < 1:
        raise InvalidFamilyParameters("k must be >= 1")
    parts = starlike_partitions(total, k)
    if not parts:
        raise InvalidFamilyParameters(f"no partition of {total} into {k} parts >= 2")
    if k <= 2:
        return [build(Path(total - k + 1))]
    return [build(Spider(*p)) for p in parts]


def all_starlike_of_order(order: int, k: int) -> List[Graph]:
    """Same family, parameterized by the number of vertices."""
    return all_starlike(order + k - 1, k)


def spider_signature(t: Graph) -> Tuple[int, ...]:
    """Leg lengths plus one, non-increasing, for a starlike tree."""
    if not t.is_tree():
        raise NotATree(f"graph with n={t.n}, m={t.m} is not a tree")
    high = [v for v in range(t.n) if t.degree(v) >= 3]
    if not high:
        raise NotStarlike("path")
    if len(high) > 1:
        raise NotStarlike("multiple")
    center = high[0]
    legs = []
    for start in t.adj[center]:
        length, prev, cur = 1, center, start
        while t.degree(cur) == 2:
            prev, cur = cur, next(u for u in t.adj[cur] if u != prev)
            length += 1
        legs.append(length + 1)
    return tuple(sorted(legs, reverse=True))
