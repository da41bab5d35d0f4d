from __future__ import annotations

import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indorder.errors import NotAForest, TooLarge
from indorder.families import Complete, Copies, Cycle, Gn, Hnk, Path, Spider, Star, build
from indorder.graph import Graph, delete_closed_nbhd_edge, delete_edge, disjoint_union
from indorder.indpoly import (
    brute_force_polynomial,
    clear_memo,
    independence_polynomial,
    independence_polynomial_tree,
)
from indorder.poly import IntPolynomial
from indorder.trees import all_trees

from oracles import independent_set_counts, random_connected_graph, random_graph, relabel

X2 = IntPolynomial([0, 0, 1])


def P(*cs):
    return IntPolynomial(cs)


# published values
def test_k2():
    assert independence_polynomial(build(Complete(2))) == P(1, 2)


def test_three_k1():
    assert independence_polynomial(build(Copies(3, Complete(1)))) == P(1, 1) ** 3


def test_h63():
    assert independence_polynomial(build(Hnk(6, 3))) == P(1, 6, 10, 6, 1)


def test_t233():
    assert independence_polynomial(build(Spider(2, 3, 3))) == P(1, 6, 10, 5)


def test_t224_matches_independent_set_count():
    # the published cubic coefficient is 3; direct enumeration gives 5
    g = build(Spider(2, 2, 4))
    assert independent_set_counts(g) == [1, 6, 10, 5, 1]
    assert independence_polynomial(g) == P(1, 6, 10, 5, 1)


# values from independent oracles
def test_small_examples():
    assert independence_polynomial(build(Path(3))) == P(1, 3, 1)
    assert independence_polynomial_tree(build(Path(4))) == P(1, 4, 3)
    assert independence_polynomial_tree(build(Star(5))) == P(1, 1) ** 4 + P(0, 1)
    assert independence_polynomial_tree(Graph.empty(1)) == P(1, 1)
    assert brute_force_polynomial(build(Cycle(4))) == P(1, 4, 2)
    assert brute_force_polynomial(build(Complete(4))) == P(1, 4)
    assert brute_force_polynomial(Graph.empty(0)) == P(1)
    assert independence_polynomial(Graph.empty(0)) == P(1)


def test_tree_dp_rejects_cycles():
    with pytest.raises(NotAForest):
        independence_polynomial_tree(build(Cycle(3)))


def test_brute_force_limit():
    with pytest.raises(TooLarge):
        brute_force_polynomial(Graph.empty(30))


def test_brute_force_matches_subset_enumeration():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 8), rng.random())
        assert list(brute_force_polynomial(g).coeffs) == independent_set_counts(g)


def test_all_trees_match_brute_force():
    for n in range(1, 11):
        for t in all_trees(n).trees:
            assert independence_polynomial(t) == brute_force_polynomial(t)


def test_random_connected_graphs_match_brute_force():
    rng = random.Random(17)
    for _ in range(120):
        n = rng.randint(1, 14)
        g = random_connected_graph(rng, n, rng.choice([0.1, 0.25, 0.5]))
        assert independence_polynomial(g) == brute_force_polynomial(g)


def test_cycle_and_gn_share_polynomial():
    for n in range(3, 31):
        assert independence_polynomial(build(Cycle(n))) == independence_polynomial(build(Gn(n)))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.floats(0.1, 0.9), st.integers(0, 10 ** 9))
def test_edge_recursion(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    if g.m == 0:
        return
    e = rng.choice(g.edges())
    lhs = independence_polynomial(g)
    rhs = independence_polynomial(delete_edge(g, e)) - X2 * independence_polynomial(delete_closed_nbhd_edge(g, e))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 10 ** 9))
def test_multiplicative_over_union(a, b, seed):
    rng = random.Random(seed)
    g, h = random_graph(rng, a, 0.4), random_graph(rng, b, 0.4)
    assert independence_polynomial(disjoint_union(g, h)) == independence_polynomial(g) * independence_polynomial(h)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 11), st.floats(0, 1), st.integers(0, 10 ** 9))
def test_coefficient_identities(n, p, seed):
    g = random_graph(random.Random(seed), n, p)
    c = independence_polynomial(g).coeffs
    assert c[0] == 1 and c[1] == n
    if len(c) > 2:
        assert c[2] == comb(n, 2) - g.m
    assert all(x > 0 for x in c)
    assert len(c) - 1 == len(independent_set_counts(g)) - 1


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10 ** 9))
def test_result_independent_of_labels_and_memo(n, seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, 0.35)
    perm = list(range(n))
    rng.shuffle(perm)
    before = independence_polynomial(g)
    clear_memo()
    assert independence_polynomial(relabel(g, perm)) == before


def test_large_coefficients_exact():
    # 40 disjoint edges: (1+2x)^40 has coefficients beyond 64 bits
    g = build(Copies(40, Complete(2)))
    p = independence_polynomial(g)
    assert p == P(1, 2) ** 40
    assert p.coeffs[20] == comb(40, 20) * 2 ** 20
