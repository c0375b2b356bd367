import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_has_induced_claw, brute_maximal_stable_sets, random_graph, random_tree
from indpoly.compute import indpoly
from indpoly.enumeration import trees_up_to
from indpoly.graphs import (
    BoundExceededError,
    FamilySpec,
    build,
    canonical_form,
    centipede,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_closed_neighborhood,
    delete_edge,
    delete_open_neighborhoods,
    delete_vertex,
    delete_vertices,
    disjoint_union,
    edge_join,
    edge_join_preserves_well_covered,
    empty_graph,
    enumerate_maximal_stable_sets,
    find_claw,
    generate,
    gmn_graph,
    is_claw_free,
    is_connected,
    is_forest,
    is_pendant,
    is_simplicial,
    is_tree,
    is_well_covered,
    is_well_covered_tree,
    k2_triangle_chain,
    path_graph,
    rewire_p4_appendage,
    rewire_p4_bridge,
    spider,
    stability_number,
    star_graph,
    triangle_chain,
    zykov_sum,
)


def test_build_validates_and_dedups():
    g = build(4, [(0, 1), (0, 2), (0, 3)])
    assert g.n == 4 and g.edge_count == 3
    assert build(1, []).n == 1
    # duplicate edges collapse, either orientation
    g = build(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edge_count == 2
    with pytest.raises(ValueError):
        build(3, [(0, 3)])
    with pytest.raises(ValueError):
        build(3, [(1, 1)])


def test_disjoint_union_counts():
    k6 = complete_graph(6)
    three_k6 = disjoint_union(disjoint_union(k6, k6), k6)
    assert three_k6.n == 18 and three_k6.edge_count == 45
    two_k1 = disjoint_union(empty_graph(1), empty_graph(1))
    assert two_k1.n == 2 and two_k1.edge_count == 0
    p2p2 = disjoint_union(path_graph(2), path_graph(2))
    assert indpoly(p2p2) == indpoly(path_graph(2)) * indpoly(path_graph(2))


def test_zykov_sum():
    k3 = zykov_sum(complete_graph(2), complete_graph(1))
    assert canonical_form(k3) == canonical_form(complete_graph(3))
    k2 = zykov_sum(complete_graph(1), complete_graph(1))
    assert k2.edge_count == 1


def test_edge_join_counts():
    d2 = edge_join(complete_graph(3), 0, complete_graph(3), 0)
    assert d2.n == 6 and d2.edge_count == 7
    k2 = edge_join(complete_graph(1), 0, complete_graph(1), 0)
    assert k2.edge_count == 1
    g = gmn_graph(2, 4)
    assert g.n == 12
    with pytest.raises(ValueError):
        edge_join(complete_graph(2), 5, complete_graph(2), 0)


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_edge_join_size_invariant(n1, n2, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    g1 = random_graph(rng, min_n=n1, max_n=n1)
    g2 = random_graph(rng, min_n=n2, max_n=n2)
    j = edge_join(g1, rng.randrange(n1), g2, rng.randrange(n2))
    assert j.n == n1 + n2
    assert j.edge_count == g1.edge_count + g2.edge_count + 1


def test_generate_spider():
    s2 = generate(FamilySpec("spider", (2,)))
    assert s2.n == 6
    assert canonical_form(s2) == canonical_form(centipede(3))
    for n in (2, 3, 5, 8):
        s = spider(n)
        assert sorted(s.degrees()) == sorted([n + 1] + [2] * n + [1] * (n + 1))
        assert is_tree(s)


def test_generate_small_families():
    assert canonical_form(centipede(1)) == canonical_form(complete_graph(2))
    assert canonical_form(triangle_chain(1)) == canonical_form(complete_graph(3))
    assert triangle_chain(0).n == 0
    assert k2_triangle_chain(1).n == 5
    star = generate(FamilySpec("star", (3,)))
    assert star.degrees() == [3, 1, 1, 1]
    km = complete_multipartite((2, 3))
    assert km.edge_count == 6
    with pytest.raises(ValueError):
        generate(FamilySpec("cycle", (2,)))
    with pytest.raises(ValueError):
        generate(FamilySpec("gmn", (1, 4)))
    with pytest.raises(ValueError):
        generate(FamilySpec("nonsense", (3,)))
    with pytest.raises(ValueError):
        generate(FamilySpec("spider", (2, 2)))


def test_gmn_matches_explicit_join():
    for m, n in [(2, 2), (2, 4), (3, 5)]:
        assert gmn_graph(m, n) == edge_join(centipede(m), 1, centipede(n), 1)


def test_deletions():
    k13 = star_graph(3)
    g, remap = delete_closed_neighborhood(k13, 0)
    assert g.n == 0 and remap == {}

    p4 = path_graph(4)
    cut = delete_edge(p4, 1, 2)
    assert canonical_form(cut) == canonical_form(
        disjoint_union(path_graph(2), path_graph(2))
    )
    with pytest.raises(ValueError):
        delete_edge(p4, 0, 2)

    d2 = edge_join(complete_graph(3), 1, complete_graph(3), 0)
    # chain bridge runs between vertex 1 and vertex 3; removing both open
    # neighborhoods wipes the whole 6-vertex graph
    g, _ = delete_open_neighborhoods(d2, 1, 3)
    assert g.n == 0

    g, remap = delete_vertex(path_graph(4), 0)
    assert g.n == 3 and remap == {1: 0, 2: 1, 3: 2}
    assert canonical_form(g) == canonical_form(path_graph(3))

    g, remap = delete_vertices(path_graph(5), [1, 3])
    assert g.n == 3 and g.edge_count == 0
    assert remap == {0: 0, 2: 1, 4: 2}


def test_simplicial_and_pendant():
    p4 = path_graph(4)
    assert is_simplicial(p4, 0) and is_pendant(p4, 0)
    assert not is_simplicial(p4, 1)
    hub = star_graph(3)
    assert not is_simplicial(hub, 0)
    assert is_simplicial(hub, 1) and is_pendant(hub, 1)
    # the third vertex of each triangle in a chain keeps a complete neighborhood
    d3 = triangle_chain(3)
    assert is_simplicial(d3, 2)
    assert not is_simplicial(d3, 1)


def test_claw_detection():
    k13 = star_graph(3)
    claw = find_claw(k13)
    assert claw is not None and sorted(claw) == [0, 1, 2, 3]
    for n in range(1, 9):
        assert is_claw_free(triangle_chain(n))
    w3 = centipede(3)
    assert not is_claw_free(w3)


@settings(max_examples=150)
@given(st.integers(0, 10**6))
def test_claw_detection_matches_bruteforce(seed):
    g = random_graph(random.Random(seed), max_n=8)
    assert is_claw_free(g) == (not brute_has_induced_claw(g))


def test_maximal_stable_sets_examples():
    p4 = path_graph(4)
    sets = enumerate_maximal_stable_sets(p4)
    assert sorted(sorted(s) for s in sets) == [[0, 2], [0, 3], [1, 3]]
    k3 = complete_graph(3)
    assert sorted(sorted(s) for s in enumerate_maximal_stable_sets(k3)) == [[0], [1], [2]]
    k13 = star_graph(3)
    assert sorted(sorted(s) for s in enumerate_maximal_stable_sets(k13)) == [
        [0],
        [1, 2, 3],
    ]
    assert enumerate_maximal_stable_sets(empty_graph(0)) == [frozenset()]
    with pytest.raises(BoundExceededError):
        enumerate_maximal_stable_sets(empty_graph(25))


@settings(max_examples=100)
@given(st.integers(0, 10**6))
def test_maximal_stable_sets_match_bruteforce(seed):
    g = random_graph(random.Random(seed), max_n=8)
    got = sorted(sorted(s) for s in enumerate_maximal_stable_sets(g))
    want = sorted(sorted(s) for s in brute_maximal_stable_sets(g))
    assert got == want


def test_well_covered_examples():
    assert not is_well_covered(star_graph(3))
    t1 = gmn_graph(2, 3)
    assert is_well_covered(t1) and stability_number(t1) == 5
    for n in range(1, 7):
        assert is_well_covered(triangle_chain(n))
        assert stability_number(triangle_chain(n)) == n


def test_well_covered_tree_criterion():
    assert is_well_covered_tree(empty_graph(1))
    assert is_well_covered_tree(path_graph(2))
    assert is_well_covered_tree(path_graph(4))
    assert not is_well_covered_tree(path_graph(5))
    assert not is_well_covered_tree(star_graph(3))
    with pytest.raises(ValueError):
        is_well_covered_tree(cycle_graph(4))
    with pytest.raises(ValueError):
        is_well_covered_tree(disjoint_union(path_graph(2), path_graph(2)))


def test_well_covered_tree_agrees_with_bruteforce_small():
    for t in trees_up_to(9):
        assert is_well_covered_tree(t) == is_well_covered(t)


def test_random_trees_criterion_agreement():
    rng = random.Random(7)
    for _ in range(100):
        t = random_tree(rng, rng.randint(1, 11))
        assert is_well_covered_tree(t) == is_well_covered(t)


def test_rewire_appendage():
    left = edge_join(path_graph(4), 1, complete_graph(2), 0)
    right = rewire_p4_appendage(left, 0, 1, 2, 3)
    assert right.n == left.n and right.edge_count == left.edge_count
    assert indpoly(left) == indpoly(right)
    assert right.has_edge(0, 2) and not right.has_edge(2, 3)
    assert right.degree(3) == 0

    # interior centipede quadruples fail the strict pattern: the pivot
    # spine vertex keeps a third neighbor
    w4 = centipede(4)
    with pytest.raises(ValueError):
        rewire_p4_appendage(w4, 6, 2, 1, 5)
    # but the bridge form accepts them and still preserves the polynomial
    folded = rewire_p4_bridge(w4, 6, 2, 1, 5)
    assert indpoly(folded) == indpoly(w4)
    # at the chain end the strict pattern holds and both forms agree
    assert rewire_p4_appendage(w4, 5, 1, 0, 4) == rewire_p4_bridge(w4, 5, 1, 0, 4)

    with pytest.raises(ValueError):
        # cd is not an edge of the star
        rewire_p4_appendage(star_graph(3), 1, 0, 2, 3)
    with pytest.raises(ValueError):
        # no ac edge allowed
        rewire_p4_bridge(complete_graph(4), 0, 1, 2, 3)


@settings(max_examples=100)
@given(st.integers(0, 10**6))
def test_rewire_preserves_polynomial(seed):
    rng = random.Random(seed)
    g1 = random_graph(rng, min_n=1, max_n=8)
    v = rng.randrange(g1.n)
    left = edge_join(path_graph(4), 1, g1, v)
    right = rewire_p4_appendage(left, 0, 1, 2, 3)
    assert indpoly(left) == indpoly(right)


def test_canonical_form_examples():
    a = build(3, [(0, 1), (1, 2)])
    b = build(3, [(1, 0), (0, 2)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(complete_graph(3)) == ((0, 1), (0, 2), (1, 2))
    g1 = build(5, [(0, 1), (1, 2), (0, 3), (1, 3), (3, 4)])
    g2 = build(5, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 1)])
    assert indpoly(g1) == indpoly(g2)  # equal polynomials...
    assert canonical_form(g1) != canonical_form(g2)  # ...but not isomorphic
    with pytest.raises(BoundExceededError):
        canonical_form(empty_graph(11))


@settings(max_examples=100)
@given(st.integers(0, 10**6))
def test_canonical_form_is_relabeling_invariant(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_n=7)
    perm = list(range(g.n))
    rng.shuffle(perm)
    relabeled = build(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert canonical_form(g) == canonical_form(relabeled)


def test_connectivity_helpers():
    assert is_connected(empty_graph(0))
    assert not is_connected(disjoint_union(complete_graph(2), complete_graph(2)))
    assert is_forest(disjoint_union(path_graph(3), path_graph(2)))
    assert not is_forest(cycle_graph(5))
    assert is_tree(path_graph(6))


def test_edge_join_well_covered_hypothesis_predicate():
    k3 = complete_graph(3)
    assert edge_join_preserves_well_covered(k3, 0)
    p4 = path_graph(4)
    # the endpoint is simplicial but its only neighbor is not
    assert not edge_join_preserves_well_covered(p4, 0)
    joined = edge_join(k3, 0, complete_graph(3), 0)
    assert is_well_covered(joined)
    assert stability_number(joined) == 2
