"""Independence-polynomial computation by several mutually checking methods.

The methods are deliberately redundant: a brute-force stable-set counter,
three deletion recursions, and a linear-time forest dynamic program.  Any
disagreement between them on the same graph is a bug, and the test suite
exploits that.
"""

from __future__ import annotations

import enum
import math
import os
from typing import List, Optional, Sequence, Tuple

from .graphs import (
    BoundExceededError,
    Graph,
    connected_components,
    delete_closed_neighborhood,
    delete_edge,
    delete_open_neighborhoods,
    delete_vertices,
    is_claw_free,
    is_forest,
)
from .poly import IntPoly, unimodality

ORACLE_BOUND_ENV = "INDPOLY_ORACLE_BOUND"
DEFAULT_ORACLE_BOUND = 25
DEFAULT_NODE_BUDGET = 2_000_000


class Method(enum.Enum):
    ORACLE = "oracle"
    VERTEX_RECURSION = "vertex-recursion"
    CLIQUE_RECURSION = "clique-recursion"
    EDGE_RECURSION = "edge-recursion"
    TREE_DP = "tree-dp"
    AUTO = "auto"


# -- raw coefficient-list helpers (kept off IntPoly for speed) ---------------


def _mul(a: List[int], b: List[int]) -> List[int]:
    if a == [1]:
        return list(b)
    if b == [1]:
        return list(a)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _add_shifted(base: List[int], inc: List[int], k: int) -> List[int]:
    out = list(base)
    need = len(inc) + k
    if len(out) < need:
        out.extend([0] * (need - len(out)))
    for i, c in enumerate(inc):
        out[i + k] += c
    return out


def _validated(g: Graph, coeffs: Sequence[int]) -> IntPoly:
    """Wrap coefficients, checking the forced low-order counts.

    s0 = 1, s1 = |V|, and s2 = C(|V|, 2) - |E| hold for every graph; a
    mismatch means the computation itself is broken.
    """
    p = IntPoly(coeffs)
    n, m = g.n, g.edge_count
    if p[0] != 1 or p[1] != n or p[2] != math.comb(n, 2) - m:
        raise RuntimeError(
            f"inconsistent stable-set counts for {g!r}: "
            f"got s0={p[0]}, s1={p[1]}, s2={p[2]}"
        )
    return p


# -- subset-enumeration oracle ----------------------------------------------


def oracle_indpoly(g: Graph, max_vertices: Optional[int] = None) -> IntPoly:
    """Count stable sets of each size by explicit enumeration.

    The coefficient of x^k is the literal number of stable k-subsets; this
    is the ground truth the recursive methods are tested against.
    """
    if max_vertices is None:
        max_vertices = int(os.environ.get(ORACLE_BOUND_ENV, DEFAULT_ORACLE_BOUND))
    n = g.n
    if n > max_vertices:
        raise BoundExceededError(
            f"oracle limited to {max_vertices} vertices, got {n}"
        )
    adj = g.adjacency_masks()
    counts = [0] * (n + 1)

    def extend(start: int, banned: int, size: int) -> None:
        counts[size] += 1
        for v in range(start, n):
            if not (banned >> v) & 1:
                extend(v + 1, banned | adj[v] | (1 << v), size + 1)

    extend(0, 0, 0)
    return _validated(g, counts)


# -- vertex recursion ---------------------------------------------------------


def _mask_components(mask: int, adj: Sequence[int]) -> List[int]:
    comps = []
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                u = (f & -f).bit_length() - 1
                f &= f - 1
                grow |= adj[u] & mask
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def vertex_recursion(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> IntPoly:
    """Delete-a-vertex recursion with memoization and component splitting.

    Pivots on a maximum-degree vertex (ties to the lowest index); every
    recursive instance is an induced subgraph of g, so the memo is keyed by
    the surviving-vertex bitmask.  The budget caps distinct subproblems.
    """
    adj = g.adjacency_masks()
    memo: dict = {0: [1]}
    remaining = node_budget

    def solve(mask: int) -> List[int]:
        nonlocal remaining
        hit = memo.get(mask)
        if hit is not None:
            return hit
        remaining -= 1
        if remaining < 0:
            raise BoundExceededError(
                f"vertex recursion exceeded its {node_budget}-subproblem budget"
            )
        comps = _mask_components(mask, adj)
        if len(comps) > 1:
            poly = [1]
            for comp in comps:
                poly = _mul(poly, solve(comp))
        else:
            pivot, best = -1, -1
            m = mask
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                deg = (adj[v] & mask).bit_count()
                if deg > best:
                    pivot, best = v, deg
            without = solve(mask & ~(1 << pivot))
            with_pivot = solve(mask & ~(adj[pivot] | (1 << pivot)))
            poly = _add_shifted(without, with_pivot, 1)
        memo[mask] = poly
        return poly

    return _validated(g, solve((1 << g.n) - 1))


# -- clique recursion ---------------------------------------------------------


def _greedy_clique(g: Graph) -> List[int]:
    degs = g.degrees()
    start = max(range(g.n), key=lambda v: (degs[v], -v))
    clique = [start]
    for v in sorted(g.neighbors(start)):
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def clique_recursion(g: Graph, clique: Optional[Sequence[int]] = None) -> IntPoly:
    """Split on a complete subgraph U: sets avoiding U plus sets using one v in U.

    The identity is applied once at the root; subproblems are solved by the
    automatic dispatcher.  Without an explicit clique, a greedy maximal
    clique around a maximum-degree vertex is used.
    """
    if g.n == 0:
        return IntPoly([1])
    if clique is None:
        clique = _greedy_clique(g)
    clique = list(clique)
    if not clique:
        raise ValueError("clique must be non-empty")
    for u in clique:
        g._check_vertex(u)
    for u_i in range(len(clique)):
        for v_i in range(u_i + 1, len(clique)):
            if not g.has_edge(clique[u_i], clique[v_i]):
                raise ValueError(
                    f"vertices {clique[u_i]} and {clique[v_i]} are not adjacent; not a clique"
                )
    rest, _ = delete_vertices(g, clique)
    total = list(indpoly(rest).coeffs)
    for v in clique:
        sub, _ = delete_closed_neighborhood(g, v)
        total = _add_shifted(total, list(indpoly(sub).coeffs), 1)
    return _validated(g, total)


# -- edge recursion ------------------------------------------------------------


def edge_recursion(g: Graph, u: Optional[int] = None, v: Optional[int] = None) -> IntPoly:
    """Delete-an-edge recursion: I(G - uv) - x^2 * I(G - N(u)|N(v)).

    The open neighborhoods contain u and v themselves because uv is an
    edge, so both endpoints disappear from the second term.  Applied once
    at the root; subproblems go to the automatic dispatcher.
    """
    if u is None or v is None:
        edges = g.edges()
        if not edges:
            coeffs = [math.comb(g.n, k) for k in range(g.n + 1)]
            return _validated(g, coeffs)
        u, v = edges[0]
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) is not present")
    p_minus = indpoly(delete_edge(g, u, v))
    shrunk, _ = delete_open_neighborhoods(g, u, v)
    p_shrunk = indpoly(shrunk)
    total = _add_shifted(
        list(p_minus.coeffs), [-c for c in p_shrunk.coeffs], 2
    )
    return _validated(g, total)


# -- forest dynamic program -----------------------------------------------------


def tree_dp(g: Graph) -> IntPoly:
    """Rooted two-state dynamic program over a forest.

    Per vertex: the polynomial of sets containing it and the polynomial of
    sets avoiding it; children fold in bottom-up.  Rejects cyclic input.
    """
    if not is_forest(g):
        raise ValueError("input graph has a cycle")
    total = [1]
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        order = [root]
        parent = {root: -1}
        seen[root] = True
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for w in g.neighbors(x):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = x
                    order.append(w)
        with_v = {v: [0, 1] for v in order}
        without_v = {v: [1] for v in order}
        for x in reversed(order):
            p = parent[x]
            if p >= 0:
                with_v[p] = _mul(with_v[p], without_v[x])
                without_v[p] = _mul(
                    without_v[p], _add_shifted(without_v[x], with_v[x], 0)
                )
        total = _mul(total, _add_shifted(without_v[root], with_v[root], 0))
    return _validated(g, total)


# -- dispatcher and derived formulas ---------------------------------------------


def indpoly(g: Graph, method: Method = Method.AUTO) -> IntPoly:
    """Compute I(G; x) by the requested method (forests default to the DP)."""
    if method is Method.AUTO:
        return tree_dp(g) if is_forest(g) else vertex_recursion(g)
    if method is Method.ORACLE:
        return oracle_indpoly(g)
    if method is Method.VERTEX_RECURSION:
        return vertex_recursion(g)
    if method is Method.CLIQUE_RECURSION:
        return clique_recursion(g)
    if method is Method.EDGE_RECURSION:
        return edge_recursion(g)
    if method is Method.TREE_DP:
        return tree_dp(g)
    raise ValueError(f"unknown method {method!r}")


def edge_join_formula(g1: Graph, v1: int, g2: Graph, v2: int) -> IntPoly:
    """Independence polynomial of an edge-join from its parts.

    I(G1)*I(G2) - x^2 * I(G1 - N[v1]) * I(G2 - N[v2]); valid for arbitrary
    graphs, and cross-checked against direct computation in the tests.
    """
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    h1, _ = delete_closed_neighborhood(g1, v1)
    h2, _ = delete_closed_neighborhood(g2, v2)
    correction = (indpoly(h1) * indpoly(h2)).shift(2)
    return indpoly(g1) * indpoly(g2) - correction


def check_hamidoune(g: Graph, p: Optional[IntPoly] = None) -> bool:
    """Claw-free graphs must have unimodal polynomials; False is a refutation.

    A False return in any test is treated as a loud failure: it would mean
    either the computation or the claw detection is broken.
    """
    if not is_claw_free(g):
        return True
    if p is None:
        p = indpoly(g)
    return unimodality(p).is_unimodal


def connected_component_graphs(g: Graph) -> List[Graph]:
    """Induced subgraphs of the connected components, densely re-indexed."""
    out = []
    for comp in connected_components(g):
        keep = set(comp)
        sub, _ = delete_vertices(g, [v for v in range(g.n) if v not in keep])
        out.append(sub)
    return out
