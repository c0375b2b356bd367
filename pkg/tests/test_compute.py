import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_indpoly, random_graph
from indpoly.compute import (
    Method,
    check_hamidoune,
    clique_recursion,
    edge_join_formula,
    edge_recursion,
    indpoly,
    oracle_indpoly,
    tree_dp,
    vertex_recursion,
)
from indpoly.graphs import (
    BoundExceededError,
    build,
    centipede,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_closed_neighborhood,
    disjoint_union,
    disjoint_union_all,
    edge_join,
    empty_graph,
    gmn_graph,
    is_forest,
    k2_triangle_chain,
    path_graph,
    spider,
    star_graph,
    triangle_chain,
    zykov_sum,
)
from indpoly.poly import IntPoly, fibonacci_poly, unimodality


def test_oracle_examples():
    assert oracle_indpoly(star_graph(3)) == IntPoly([1, 4, 3, 1])
    assert oracle_indpoly(empty_graph(0)) == IntPoly([1])
    assert oracle_indpoly(complete_graph(5)) == IntPoly([1, 5])


def test_oracle_bound_and_env_override(monkeypatch):
    with pytest.raises(BoundExceededError):
        oracle_indpoly(empty_graph(26))
    monkeypatch.setenv("INDPOLY_ORACLE_BOUND", "5")
    with pytest.raises(BoundExceededError):
        oracle_indpoly(empty_graph(6))
    assert oracle_indpoly(empty_graph(5)) == IntPoly([1, 5, 10, 10, 5, 1])
    monkeypatch.setenv("INDPOLY_ORACLE_BOUND", "30")
    assert oracle_indpoly(empty_graph(26))[1] == 26


@settings(max_examples=120)
@given(st.integers(0, 10**6))
def test_oracle_matches_bruteforce(seed):
    g = random_graph(random.Random(seed), max_n=9)
    assert oracle_indpoly(g) == brute_indpoly(g)


def test_vertex_recursion_examples():
    w4 = centipede(4)
    assert vertex_recursion(w4) == IntPoly([1, 8, 21, 22, 8])
    # the big join follows the disjoint-union and join identities exactly
    three_k6 = disjoint_union_all([complete_graph(6)] * 3)
    big = zykov_sum(complete_graph(100), three_k6)
    expected = (
        indpoly(complete_graph(100)) + indpoly(three_k6) - IntPoly([1])
    )
    assert vertex_recursion(big) == expected
    assert not unimodality(vertex_recursion(big)).is_unimodal


def test_vertex_recursion_budget():
    with pytest.raises(BoundExceededError):
        vertex_recursion(cycle_graph(12), node_budget=3)


def test_clique_recursion():
    assert clique_recursion(complete_graph(3), [0, 1, 2]) == IntPoly([1, 3])
    d2 = edge_join(complete_graph(3), 0, complete_graph(3), 0)
    assert clique_recursion(d2, [0, 1, 2]) == brute_indpoly(d2)
    p4 = path_graph(4)
    assert clique_recursion(p4, [1]) == vertex_recursion(p4)
    assert clique_recursion(empty_graph(0)) == IntPoly([1])
    with pytest.raises(ValueError):
        clique_recursion(p4, [0, 2])
    with pytest.raises(ValueError):
        clique_recursion(p4, [])


def test_edge_recursion():
    g24 = gmn_graph(2, 4)
    assert edge_recursion(g24, 1, 5) == IntPoly([1, 12, 55, 125, 150, 91, 22])
    g33 = gmn_graph(3, 3)
    assert edge_recursion(g33, 1, 7) == IntPoly([1, 12, 55, 126, 154, 96, 24])
    k2 = complete_graph(2)
    assert edge_recursion(k2, 0, 1) == IntPoly([1, 2])
    assert edge_recursion(empty_graph(3)) == IntPoly([1, 3, 3, 1])
    with pytest.raises(ValueError):
        edge_recursion(path_graph(3), 0, 2)


def test_tree_dp():
    t1 = gmn_graph(2, 3)
    assert tree_dp(t1) == IntPoly([1, 10, 36, 60, 47, 14])
    for n in range(1, 21):
        assert tree_dp(path_graph(n)) == fibonacci_poly(n + 1)
    assert tree_dp(empty_graph(1)) == IntPoly([1, 1])
    with pytest.raises(ValueError):
        tree_dp(cycle_graph(4))


def test_dispatcher_identities():
    for n in range(3, 21):
        expected = fibonacci_poly(n - 1) + (IntPoly([0, 2]) * fibonacci_poly(n - 2))
        assert indpoly(cycle_graph(n)) == expected
    for parts, alph in [((3, 3, 3), 3), ((4, 4), 4), ((2, 2, 2, 2), 2)]:
        g = complete_multipartite(parts)
        k = len(parts)
        expected = k * (IntPoly([1, 1]) ** alph) - IntPoly([k - 1])
        assert indpoly(g) == expected
    for n in range(1, 8):
        assert indpoly(complete_graph(n)) == IntPoly([1, n])


def test_dispatcher_methods():
    g = cycle_graph(6)
    ref = brute_indpoly(g)
    for method in (
        Method.ORACLE,
        Method.VERTEX_RECURSION,
        Method.CLIQUE_RECURSION,
        Method.EDGE_RECURSION,
    ):
        assert indpoly(g, method) == ref
    t = path_graph(7)
    assert indpoly(t, Method.TREE_DP) == brute_indpoly(t)
    assert indpoly(t) == brute_indpoly(t)


@settings(max_examples=120)
@given(st.integers(0, 10**6))
def test_method_agreement_random(seed):
    g = random_graph(random.Random(seed), max_n=9)
    ref = oracle_indpoly(g)
    assert vertex_recursion(g) == ref
    assert clique_recursion(g) == ref
    assert edge_recursion(g) == ref
    if is_forest(g):
        assert tree_dp(g) == ref
    assert check_hamidoune(g, ref)


@settings(max_examples=80)
@given(st.integers(0, 10**6))
def test_multiplicativity_and_join_sum(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_n=6)
    h = random_graph(rng, max_n=6)
    assert indpoly(disjoint_union(g, h)) == indpoly(g) * indpoly(h)
    assert indpoly(zykov_sum(g, h)) == indpoly(g) + indpoly(h) - IntPoly([1])


def test_low_order_coefficients_are_forced():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, max_n=9)
        p = indpoly(g)
        assert p[0] == 1
        assert p[1] == g.n
        assert p[2] == math.comb(g.n, 2) - g.edge_count


def test_degree_equals_stability_number():
    from indpoly.graphs import stability_number

    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, min_n=1, max_n=9)
        assert indpoly(g).degree == stability_number(g)


def test_edge_join_formula():
    lhs = edge_join_formula(complete_graph(3), 0, complete_graph(3), 0)
    assert lhs == IntPoly([1, 6, 8])
    assert lhs == brute_indpoly(edge_join(complete_graph(3), 0, complete_graph(3), 0))
    assert edge_join_formula(complete_graph(1), 0, complete_graph(1), 0) == IntPoly([1, 2])
    # extending a triangle chain by a bridged edge follows the same formula
    for n in range(1, 9):
        chain = triangle_chain(n)
        prev = triangle_chain(n - 1)
        expected = IntPoly([1, 2]) * indpoly(chain) - indpoly(prev).shift(2)
        assert edge_join_formula(complete_graph(2), 1, chain, 0) == expected
        assert indpoly(k2_triangle_chain(n)) == expected


@settings(max_examples=80)
@given(st.integers(0, 10**6))
def test_edge_join_formula_matches_direct(seed):
    rng = random.Random(seed)
    g1 = random_graph(rng, min_n=1, max_n=7)
    g2 = random_graph(rng, min_n=1, max_n=7)
    v1 = rng.randrange(g1.n)
    v2 = rng.randrange(g2.n)
    joined = edge_join(g1, v1, g2, v2)
    assert edge_join_formula(g1, v1, g2, v2) == indpoly(joined)


def test_hamidoune_guard():
    assert check_hamidoune(triangle_chain(5))
    assert check_hamidoune(star_graph(3))  # not claw-free: vacuous
    assert check_hamidoune(cycle_graph(9))
    assert check_hamidoune(complete_graph(6))
