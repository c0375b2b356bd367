"""Shared test utilities: independent brute-force oracles and random graphs.

The brute oracles deliberately reimplement the definitions with itertools
so they share no code with the package; agreement between the two is the
point of the tests.
"""

from __future__ import annotations

import itertools
import random
from typing import List, Set, Tuple

from indpoly.graphs import Graph, build
from indpoly.poly import IntPoly


def brute_indpoly(g: Graph) -> IntPoly:
    """Count stable sets of each size over all 2^n subsets."""
    counts = [0] * (g.n + 1)
    vertices = list(range(g.n))
    for r in range(g.n + 1):
        for subset in itertools.combinations(vertices, r):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
                counts[r] += 1
    return IntPoly(counts)


def brute_maximal_stable_sets(g: Graph) -> List[Set[int]]:
    """All maximal stable sets via subset scanning."""
    stable = []
    vertices = list(range(g.n))
    for r in range(g.n + 1):
        for subset in itertools.combinations(vertices, r):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
                stable.append(set(subset))
    maximal = []
    for s in stable:
        if not any(s < t for t in stable):
            maximal.append(s)
    return maximal


def brute_has_induced_claw(g: Graph) -> bool:
    """Scan every 4-subset for an induced 3-star."""
    for quad in itertools.combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(g.has_edge(center, v) for v in leaves) and all(
                not g.has_edge(u, v) for u, v in itertools.combinations(leaves, 2)
            ):
                return True
    return False


def random_graph(rng: random.Random, min_n: int = 0, max_n: int = 10) -> Graph:
    n = rng.randint(min_n, max_n)
    density = rng.choice((0.1, 0.25, 0.4, 0.6, 0.8))
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < density
    ]
    return build(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform-ish random labeled tree by random attachment."""
    edges: List[Tuple[int, int]] = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    return build(n, edges)
