"""Exhaustive catalogues of small graphs and trees, one per isomorphism class.

Both catalogues grow by augmentation: graphs gain one vertex attached to
every subset of the previous order, trees gain one leaf at every vertex.
Duplicates collapse through a canonical certificate, so each class appears
exactly once.  Results are cached per process.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Tuple

from .graphs import BoundExceededError, Graph, build, canonical_form

MAX_GRAPH_ORDER = 7
MAX_TREE_ORDER = 14


@lru_cache(maxsize=None)
def nonisomorphic_graphs(order: int) -> Tuple[Graph, ...]:
    """All graphs on exactly `order` vertices, up to isomorphism.

    Counts per order 1..7 are 1, 2, 4, 11, 34, 156, 1044.  The order is
    capped because the census roughly doubles twelvefold per vertex.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if order > MAX_GRAPH_ORDER:
        raise BoundExceededError(
            f"graph census limited to order {MAX_GRAPH_ORDER}, got {order}"
        )
    if order == 1:
        return (build(1, []),)
    parents = nonisomorphic_graphs(order - 1)
    seen = {}
    new = order - 1
    for parent in parents:
        base_edges = parent.edges()
        for mask in range(1 << new):
            extra = [(v, new) for v in range(new) if (mask >> v) & 1]
            candidate = build(order, base_edges + extra)
            key = canonical_form(candidate)
            if key not in seen:
                seen[key] = build(order, key)
    return tuple(seen[k] for k in sorted(seen, key=lambda e: (len(e), e)))


def graphs_up_to(order: int) -> List[Graph]:
    out: List[Graph] = []
    for k in range(1, order + 1):
        out.extend(nonisomorphic_graphs(k))
    return out


# -- free trees ----------------------------------------------------------------


def _rooted_certificate(adj: List[List[int]], root: int, avoid: int) -> tuple:
    """Nested-tuple encoding of the subtree at root, not crossing `avoid`."""
    result: tuple = ()
    partial = {root: []}
    # Iterative post-order to stay clear of recursion limits on long paths.
    stack = [(root, avoid, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if expanded:
            cert = tuple(sorted(partial.pop(v)))
            if v == root:
                result = cert
            else:
                partial[parent].append(cert)
            continue
        if v != root:
            partial[v] = []
        stack.append((v, parent, True))
        for w in adj[v]:
            if w != parent:
                stack.append((w, v, False))
    return result


def free_tree_certificate(g: Graph) -> tuple:
    """Isomorphism-complete certificate of a free tree (center-rooted)."""
    n = g.n
    if n == 1:
        return ("1", ())
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    # Peel leaves layer by layer; the last one or two vertices are centers.
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    alive = n
    removed = [False] * n
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            alive -= 1
            for w in adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if not removed[v]]
    if len(centers) == 1:
        return ("1", _rooted_certificate(adj, centers[0], -2))
    c1, c2 = centers
    side1 = _rooted_certificate(adj, c1, c2)
    side2 = _rooted_certificate(adj, c2, c1)
    return ("2", tuple(sorted((side1, side2))))


@lru_cache(maxsize=None)
def nonisomorphic_trees(order: int) -> Tuple[Graph, ...]:
    """All free trees on exactly `order` vertices, up to isomorphism.

    Counts per order 1..12 are 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if order > MAX_TREE_ORDER:
        raise BoundExceededError(
            f"tree census limited to order {MAX_TREE_ORDER}, got {order}"
        )
    if order == 1:
        return (build(1, []),)
    seen = {}
    for parent in nonisomorphic_trees(order - 1):
        base_edges = parent.edges()
        for v in range(order - 1):
            candidate = build(order, base_edges + [(v, order - 1)])
            key = free_tree_certificate(candidate)
            if key not in seen:
                seen[key] = candidate
    return tuple(seen[k] for k in sorted(seen))


def trees_up_to(order: int) -> List[Graph]:
    out: List[Graph] = []
    for k in range(1, order + 1):
        out.extend(nonisomorphic_trees(k))
    return out
