"""Immutable simple graphs, named families, and structural predicates.

Vertices are dense 0-based integers.  Every operation returns a new graph;
nothing here mutates shared state, so graphs are safe to use concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class BoundExceededError(RuntimeError):
    """An exponential-time operation was asked to exceed its size guard."""


class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbor sets.

    No loops, no multi-edges, adjacency always symmetric.  Construct via
    :func:`build` or the family constructors; the raw constructor trusts
    its arguments.
    """

    __slots__ = ("n", "_adj", "_masks")

    def __init__(self, n: int, adj: Tuple[FrozenSet[int], ...]) -> None:
        self.n = n
        self._adj = adj
        self._masks: Optional[Tuple[int, ...]] = None

    def neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def degrees(self) -> List[int]:
        return [len(s) for s in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def edges(self) -> List[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def adjacency_masks(self) -> Tuple[int, ...]:
        """Neighbor sets as bitmasks, computed once per graph."""
        if self._masks is None:
            masks = []
            for s in self._adj:
                m = 0
                for w in s:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v!r} out of range for a graph on {self.n} vertices")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self._adj == other._adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build(n: int, edges: Iterable[Edge]) -> Graph:
    """Construct a graph from an edge list; duplicates collapse, loops are errors."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"vertex count must be a natural number, got {n!r}")
    adj: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


def _from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    return build(n, edges)


# -- constructions ---------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Side-by-side union; the second graph's vertices are shifted by g1.n."""
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    return build(g1.n + g2.n, edges)


def disjoint_union_all(graphs: Sequence[Graph]) -> Graph:
    out = build(0, [])
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def zykov_sum(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    off = g1.n
    g = disjoint_union(g1, g2)
    cross = [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return build(g.n, g.edges() + cross)


def edge_join(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union plus the single bridge edge (v1, v2 shifted)."""
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    g = disjoint_union(g1, g2)
    return build(g.n, g.edges() + [(v1, v2 + g1.n)])


# -- deletions (induced subgraphs are densely re-indexed) -------------------


def delete_vertices(g: Graph, vs: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph on the surviving vertices plus the old->new index map."""
    doomed = set()
    for v in vs:
        g._check_vertex(v)
        doomed.add(v)
    keep = [v for v in range(g.n) if v not in doomed]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges()
        if u not in doomed and v not in doomed
    ]
    return build(len(keep), edges), remap


def delete_vertex(g: Graph, v: int) -> Tuple[Graph, Dict[int, int]]:
    return delete_vertices(g, [v])


def delete_closed_neighborhood(g: Graph, v: int) -> Tuple[Graph, Dict[int, int]]:
    g._check_vertex(v)
    return delete_vertices(g, set(g.neighbors(v)) | {v})


def delete_open_neighborhoods(g: Graph, u: int, v: int) -> Tuple[Graph, Dict[int, int]]:
    """Delete N(u) | N(v); when uv is an edge this removes u and v too."""
    g._check_vertex(u)
    g._check_vertex(v)
    return delete_vertices(g, set(g.neighbors(u)) | set(g.neighbors(v)))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) is not present")
    return build(g.n, [e for e in g.edges() if e != (min(u, v), max(u, v))])


# -- predicates -------------------------------------------------------------


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def connected_components(g: Graph) -> List[List[int]]:
    seen: set = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(connected_components(g))


def is_simplicial(g: Graph, v: int) -> bool:
    """True when the neighborhood of v induces a complete graph."""
    nbrs = sorted(g.neighbors(v))
    return all(g.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2))


def is_pendant(g: Graph, v: int) -> bool:
    return g.degree(v) == 1


def find_claw(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """Return (center, leaf, leaf, leaf) of an induced 3-star, or None."""
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v))
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return (v, a, b, c)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def enumerate_maximal_stable_sets(g: Graph, max_vertices: int = 24) -> List[FrozenSet[int]]:
    """Every inclusion-maximal stable set, each once, deterministically ordered.

    Uses pivoting recursion on the complement (maximal stable sets are the
    complement's maximal cliques).  Guarded because the output can be
    exponential in the vertex count.
    """
    n = g.n
    if n > max_vertices:
        raise BoundExceededError(
            f"maximal-stable-set enumeration limited to {max_vertices} vertices, got {n}"
        )
    full = (1 << n) - 1
    adj = g.adjacency_masks()
    comp = [full & ~(adj[v] | (1 << v)) for v in range(n)]
    out: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot, best = -1, -1
        m = px
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = (comp[u] & p).bit_count()
            if cnt > best:
                pivot, best = u, cnt
        cand = p & ~comp[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(r | (1 << v), p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    sets = [frozenset(i for i in range(n) if (mask >> i) & 1) for mask in out]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def stability_number(g: Graph, max_vertices: int = 24) -> int:
    return max(len(s) for s in enumerate_maximal_stable_sets(g, max_vertices))


def is_well_covered(g: Graph, max_vertices: int = 24) -> bool:
    """True when all maximal stable sets share one cardinality."""
    sizes = {len(s) for s in enumerate_maximal_stable_sets(g, max_vertices)}
    return len(sizes) <= 1


def is_well_covered_tree(g: Graph) -> bool:
    """Pendant-matching recognition of well-covered trees.

    A tree qualifies exactly when it is a single vertex or its pendant
    edges form a perfect matching, i.e. every internal vertex has exactly
    one leaf neighbor.  Raises if the input is not a tree.
    """
    if not is_tree(g):
        raise ValueError("input is not a tree")
    if g.n == 1:
        return True
    for v in range(g.n):
        if g.degree(v) == 1:
            continue
        leaf_nbrs = sum(1 for w in g.neighbors(v) if g.degree(w) == 1)
        if leaf_nbrs != 1:
            return False
    return True


# -- polynomial-preserving rewiring -----------------------------------------


def rewire_p4_bridge(g: Graph, a: int, b: int, c: int, d: int) -> Graph:
    """Turn the path a-b-c-d into triangle a-b-c plus isolated d.

    Requires edges ab, bc, cd, non-edge ac, and pendant a and d; b and c may
    have any other neighbors.  The move removes cd and adds ac, and it
    preserves the independence polynomial.
    """
    for u, v in ((a, b), (b, c), (c, d)):
        if not g.has_edge(u, v):
            raise ValueError(f"pattern edge ({u}, {v}) is missing")
    if g.has_edge(a, c):
        raise ValueError(f"pattern requires non-edge ({a}, {c})")
    if g.degree(a) != 1 or g.degree(d) != 1:
        raise ValueError("pattern requires a and d to be pendant vertices")
    if len({a, b, c, d}) != 4:
        raise ValueError("pattern vertices must be distinct")
    edges = [e for e in g.edges() if e != (min(c, d), max(c, d))]
    edges.append((a, c))
    return build(g.n, edges)


def rewire_p4_appendage(g: Graph, a: int, b: int, c: int, d: int) -> Graph:
    """Strict form of :func:`rewire_p4_bridge` for a dangling 4-path.

    The quadruple must attach to the rest of the graph only through b:
    besides the bridge requirements, ad and bd must be absent and c must
    have degree exactly 2.
    """
    if g.degree(c) != 2:
        raise ValueError("pattern requires c to have degree 2")
    for u, v in ((a, d), (b, d)):
        if g.has_edge(u, v):
            raise ValueError(f"pattern requires non-edge ({u}, {v})")
    return rewire_p4_bridge(g, a, b, c, d)


# -- canonical form ----------------------------------------------------------


def canonical_form(g: Graph, max_vertices: int = 10) -> Tuple[Edge, ...]:
    """Lexicographically minimal edge list over all relabelings.

    Equal canonical forms characterize isomorphism.  The search is a
    branch-and-bound over label assignments: the vertex labeled 0 must have
    maximum degree and its neighbors must take labels 1..deg, which is
    forced for the optimum and prunes most of the n! relabelings.
    """
    n = g.n
    if n > max_vertices:
        raise BoundExceededError(
            f"canonical form limited to {max_vertices} vertices, got {n}"
        )
    if n == 0:
        return ()
    edges = g.edges()
    if not edges:
        return ()
    # Row-major positions of the upper-triangle pairs; the lex-min edge list
    # is the relabeling maximizing this bitstring (edges as early as possible).
    pos = [[0] * n for _ in range(n)]
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            pos[i][j] = pos[j][i] = p
            p += 1
    total = p
    degs = g.degrees()
    maxdeg = max(degs)
    roots = [v for v in range(n) if degs[v] == maxdeg]
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    best = -1

    def leaf_value(order: List[int]) -> int:
        inv = [0] * n
        for label, orig in enumerate(order):
            inv[orig] = label
        value = 0
        for u, v in edges:
            value |= 1 << (total - 1 - pos[inv[u]][inv[v]])
        return value

    def extend(order: List[int], used: List[bool]) -> None:
        nonlocal best
        k = len(order)
        if k == n:
            value = leaf_value(order)
            if value > best:
                best = value
            return
        if k == 0:
            candidates = roots
        elif k <= maxdeg:
            candidates = [v for v in adj[order[0]] if not used[v]]
        else:
            candidates = [v for v in range(n) if not used[v]]
        for v in candidates:
            used[v] = True
            order.append(v)
            extend(order, used)
            order.pop()
            used[v] = False

    extend([], [False] * n)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if (best >> (total - 1 - pos[i][j])) & 1:
                out.append((i, j))
    return tuple(out)


# -- named families ----------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return build(n, [])


def complete_graph(n: int) -> Graph:
    return build(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: hub 0 plus n leaves."""
    if n < 1:
        raise ValueError("a star needs at least one leaf")
    return build(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    edges = [
        (u, v)
        for b1, b2 in itertools.combinations(blocks, 2)
        for u in b1
        for v in b2
    ]
    return build(start, edges)


def spider(n: int) -> Graph:
    """Well-covered spider: hub b0, body b1..bn, leaves a0..an.

    Vertices 0..n are b0..bn, vertices n+1..2n+1 are a0..an; edges are
    a0-b0, and ai-bi plus b0-bi for each i >= 1.
    """
    if n < 2:
        raise ValueError("spider parameter must be at least 2")
    edges = [(0, n + 1)]
    for i in range(1, n + 1):
        edges.append((0, i))
        edges.append((i, n + 1 + i))
    return build(2 * n + 2, edges)


def centipede(n: int) -> Graph:
    """Spine b1..bn with one leaf ai on each bi; spine first, teeth second.

    n = 0 gives the empty graph (the natural recurrence base).
    """
    if n < 0:
        raise ValueError("centipede parameter must be a natural number")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    return build(2 * n, edges)


def triangle_chain(n: int) -> Graph:
    """n triangles linked in a path by bridge edges; n = 0 is empty.

    Triangle i (1-based) occupies vertices 3i-3..3i-1; the bridge from
    triangle i leaves its middle vertex 3i-2 and enters 3i.
    """
    if n < 0:
        raise ValueError("triangle-chain parameter must be a natural number")
    edges = []
    for i in range(1, n + 1):
        a, b, c = 3 * i - 3, 3 * i - 2, 3 * i - 1
        edges += [(a, b), (a, c), (b, c)]
        if i < n:
            edges.append((b, 3 * i))
    return build(3 * n, edges)


def k2_triangle_chain(n: int) -> Graph:
    """An edge joined to the first vertex of a triangle chain.

    The chain keeps vertices 0..3n-1; the extra pair is u1 = 3n, u2 = 3n+1
    with edges u1-u2 and u2-v where v is chain vertex 0.
    """
    if n < 1:
        raise ValueError("the chain must contain at least one triangle")
    g = triangle_chain(n)
    edges = g.edges() + [(3 * n, 3 * n + 1), (3 * n + 1, 0)]
    return build(3 * n + 2, edges)


def gmn_graph(m: int, n: int) -> Graph:
    """Two centipedes bridged at their second spine vertices."""
    if m < 2 or n < 2:
        raise ValueError("both centipedes need at least two spine vertices")
    return edge_join(centipede(m), 1, centipede(n), 1)


FAMILY_KINDS = (
    "complete",
    "path",
    "cycle",
    "star",
    "multipartite",
    "spider",
    "centipede",
    "triangle-chain",
    "k2-triangle-chain",
    "gmn",
)


@dataclass(frozen=True)
class FamilySpec:
    """Tagged description of a named family instance."""

    kind: str
    params: Tuple[int, ...]

    def label(self) -> str:
        return f"{self.kind}({', '.join(map(str, self.params))})"


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical labeled instance of a named family."""
    kind, params = spec.kind, tuple(spec.params)
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if any(not isinstance(p, int) or isinstance(p, bool) or p < 0 for p in params):
        raise ValueError(f"family parameters must be naturals, got {params!r}")

    def arity(k: int) -> None:
        if len(params) != k:
            raise ValueError(f"{kind} expects {k} parameter(s), got {len(params)}")

    if kind == "complete":
        arity(1)
        if params[0] < 1:
            raise ValueError("complete graph needs n >= 1")
        return complete_graph(params[0])
    if kind == "path":
        arity(1)
        if params[0] < 1:
            raise ValueError("path needs n >= 1")
        return path_graph(params[0])
    if kind == "cycle":
        arity(1)
        return cycle_graph(params[0])
    if kind == "star":
        arity(1)
        return star_graph(params[0])
    if kind == "multipartite":
        if not params:
            raise ValueError("multipartite needs at least one part size")
        return complete_multipartite(params)
    if kind == "spider":
        arity(1)
        return spider(params[0])
    if kind == "centipede":
        arity(1)
        if params[0] < 1:
            raise ValueError("centipede needs n >= 1")
        return centipede(params[0])
    if kind == "triangle-chain":
        arity(1)
        return triangle_chain(params[0])
    if kind == "k2-triangle-chain":
        arity(1)
        return k2_triangle_chain(params[0])
    arity(2)
    return gmn_graph(params[0], params[1])


def edge_join_preserves_well_covered(g: Graph, v: int) -> bool:
    """Hypothesis check for well-covered edge-joins at vertex v.

    True when v is simplicial and its closed neighborhood contains another
    simplicial vertex.  Exposed so callers can check it explicitly; no
    construction assumes it silently.
    """
    if not is_simplicial(g, v):
        return False
    return any(w != v and is_simplicial(g, w) for w in g.neighbors(v))
