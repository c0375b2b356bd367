"""Closed forms, recurrences, rewiring equalities, and conjecture sweeps.

Every identity is an executable check returning a :class:`CheckReport`.
Checks of proved facts are expected to pass and failing ones indicate a
bug; conjecture checks report findings instead, and a "failure" there is
data, not an error.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .compute import indpoly, tree_dp
from .enumeration import graphs_up_to, trees_up_to
from .graphs import (
    Graph,
    build,
    centipede,
    complete_graph,
    delete_closed_neighborhood,
    disjoint_union,
    disjoint_union_all,
    edge_join,
    empty_graph,
    find_claw,
    gmn_graph,
    is_claw_free,
    is_simplicial,
    is_well_covered,
    is_well_covered_tree,
    k2_triangle_chain,
    path_graph,
    rewire_p4_appendage,
    rewire_p4_bridge,
    spider,
    stability_number,
    triangle_chain,
    zykov_sum,
)
from .poly import ONE_PLUS_X, X, IntPoly, unimodality

ONE_PLUS_2X = IntPoly((1, 2))
ONE_PLUS_3X = IntPoly((1, 3))


@dataclass(frozen=True)
class CheckReport:
    """One verification row: an identity, its parameters, and the verdict."""

    name: str
    params: Tuple
    passed: bool
    lhs: Optional[IntPoly] = None
    rhs: Optional[IntPoly] = None
    detail: str = ""
    conjecture: bool = False

    @property
    def status(self) -> str:
        if self.passed:
            return "PASS"
        return "FINDING" if self.conjecture else "FAIL"

    def render(self) -> str:
        args = ", ".join(map(str, self.params))
        line = f"{self.name}({args}): {self.status}"
        if not self.passed and self.lhs is not None and self.rhs is not None:
            line += f" lhs={self.lhs.render()} rhs={self.rhs.render()}"
        if self.detail:
            line += f" [{self.detail}]"
        return line


# -- well-covered spiders -----------------------------------------------------


def spider_closed_form(n: int) -> IntPoly:
    """(1 + x) times the body polynomial with A(k) = C(n,k)*2^k + C(n-1,k-1)."""
    if n < 2:
        raise ValueError("spider parameter must be at least 2")
    body = [1] + [
        math.comb(n, k) * 2**k + math.comb(n - 1, k - 1) for k in range(1, n + 1)
    ]
    return ONE_PLUS_X * IntPoly(body)


def spider_hub_deletion_form(n: int) -> IntPoly:
    """Alternative expansion (1+x)(1+2x)^n + x(1+x)^n from deleting the hub."""
    if n < 2:
        raise ValueError("spider parameter must be at least 2")
    return ONE_PLUS_X * ONE_PLUS_2X**n + X * ONE_PLUS_X**n


def spider_mode(n: int) -> int:
    """Unique peak index of the spider polynomial: 1 + (n-1)%3 + 2*(ceil(n/3)-1)."""
    if n < 2:
        raise ValueError("spider parameter must be at least 2")
    return 1 + (n - 1) % 3 + 2 * (-(-n // 3) - 1)


def spider_check(n: int) -> CheckReport:
    """Closed form vs an independent computation, plus the mode formula."""
    closed = spider_closed_form(n)
    if n <= 60:
        other = tree_dp(spider(n))
        source = "tree-dp"
    else:
        other = spider_hub_deletion_form(n)
        source = "hub-deletion-form"
    rep = unimodality(closed)
    m = spider_mode(n)
    passed = closed == other and rep.unique_mode and rep.modes == (m, m)
    return CheckReport(
        "spider-closed-form",
        (n,),
        passed,
        closed,
        other,
        f"mode={m}, cross-check={source}",
    )


# -- triangle chains ----------------------------------------------------------


def triangle_chain_seq(n_max: int) -> List[IntPoly]:
    """Chain polynomials 0..n_max defined purely by the recurrence."""
    seq = [IntPoly((1,)), ONE_PLUS_3X]
    for _ in range(2, n_max + 1):
        seq.append(ONE_PLUS_3X * seq[-1] - seq[-2].shift(2))
    return seq[: n_max + 1]


def k2_triangle_chain_seq(n_max: int) -> List[IntPoly]:
    """Edge-joined chain polynomials 1..n_max from the chain sequence."""
    chain = triangle_chain_seq(n_max)
    return [ONE_PLUS_2X * chain[n] - chain[n - 1].shift(2) for n in range(1, n_max + 1)]


def triangle_chain_recurrence_check(n: int) -> CheckReport:
    """Graph computation vs (1+3x)*I(chain n-1) - x^2*I(chain n-2)."""
    if n < 2:
        raise ValueError("recurrence starts at n = 2")
    lhs = indpoly(triangle_chain(n))
    rhs = ONE_PLUS_3X * indpoly(triangle_chain(n - 1)) - indpoly(
        triangle_chain(n - 2)
    ).shift(2)
    rep = unimodality(lhs)
    return CheckReport(
        "triangle-chain-recurrence",
        (n,),
        lhs == rhs and rep.is_unimodal,
        lhs,
        rhs,
        f"modes={rep.modes}",
    )


def k2_triangle_chain_check(n: int) -> CheckReport:
    """Graph computation vs (1+2x)*I(chain n) - x^2*I(chain n-1)."""
    if n < 1:
        raise ValueError("the chain must contain at least one triangle")
    lhs = indpoly(k2_triangle_chain(n))
    rhs = ONE_PLUS_2X * indpoly(triangle_chain(n)) - indpoly(
        triangle_chain(n - 1)
    ).shift(2)
    rep = unimodality(lhs)
    return CheckReport(
        "k2-triangle-chain-formula",
        (n,),
        lhs == rhs and rep.is_unimodal,
        lhs,
        rhs,
        f"modes={rep.modes}",
    )


def chain_structure_checks(n: int, check_well_covered: bool) -> List[CheckReport]:
    """Claw-freeness (always) and well-coveredness (small n) of both families."""
    out = []
    families = [("triangle-chain", triangle_chain(n))]
    if n >= 1:
        families.append(("k2-triangle-chain", k2_triangle_chain(n)))
    for label, g in families:
        claw = find_claw(g)
        out.append(
            CheckReport(
                f"{label}-claw-free",
                (n,),
                claw is None,
                detail="" if claw is None else f"claw at {claw}",
            )
        )
        if check_well_covered:
            out.append(
                CheckReport(f"{label}-well-covered", (n,), is_well_covered(g))
            )
    return out


# -- centipedes ---------------------------------------------------------------


def centipede_seq(n_max: int) -> List[IntPoly]:
    """Centipede polynomials 0..n_max defined purely by the recurrence."""
    seq = [IntPoly((1,)), ONE_PLUS_2X]
    for _ in range(2, n_max + 1):
        seq.append(ONE_PLUS_X * (seq[-1] + X * seq[-2]))
    return seq[: n_max + 1]


def centipede_checks(n: int) -> List[CheckReport]:
    """Recurrence and the applicable parity factorization, with unimodality."""
    if n < 2:
        raise ValueError("centipede checks start at n = 2")
    p = tree_dp(centipede(n))
    rec = ONE_PLUS_X * (tree_dp(centipede(n - 1)) + X * tree_dp(centipede(n - 2)))
    rep = unimodality(p)
    out = [
        CheckReport(
            "centipede-recurrence",
            (n,),
            p == rec and rep.is_unimodal,
            p,
            rec,
            f"modes={rep.modes}",
        )
    ]
    m = n // 2
    if n % 2 == 0:
        twin = disjoint_union(triangle_chain(m), empty_graph(m))
        name = "centipede-even-split"
    else:
        twin = disjoint_union(k2_triangle_chain(m), empty_graph(m))
        name = "centipede-odd-split"
    q = indpoly(twin)
    out.append(CheckReport(name, (n,), p == q, p, q))
    return out


def centipede_mode_f(n: int) -> int:
    """Conjectured offset f with the centipede mode predicted at n - f(n)."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    if n <= 6:
        return 1 + n // 5
    return centipede_mode_f(2 + (n - 2) % 5) + 2 * ((n - 2) // 5)


def centipede_mode_check(n: int) -> CheckReport:
    """Conjectured mode location; a miss is a finding, not a failure."""
    predicted = n - centipede_mode_f(n)
    rep = unimodality(tree_dp(centipede(n)))
    lo, hi = rep.modes
    return CheckReport(
        "centipede-mode-conjecture",
        (n,),
        lo <= predicted <= hi,
        detail=f"predicted={predicted}, modes={rep.modes}",
        conjecture=True,
    )


# -- 4-path rewiring equalities --------------------------------------------------


def p4_rewire_check(g1: Graph, v: int) -> CheckReport:
    """Dangling 4-path vs its triangle rewiring: equal polynomials.

    When g1 is claw-free and v simplicial, the rewired graph must be
    claw-free and the shared polynomial unimodal; both are asserted.
    """
    left = edge_join(path_graph(4), 1, g1, v)
    right = rewire_p4_appendage(left, 0, 1, 2, 3)
    p_left = indpoly(left)
    p_right = indpoly(right)
    passed = p_left == p_right
    detail = ""
    if is_claw_free(g1) and is_simplicial(g1, v):
        claw = find_claw(right)
        uni = unimodality(p_left).is_unimodal
        passed = passed and claw is None and uni
        detail = "claw-free case"
    return CheckReport("p4-rewire-one-sided", (g1.n, v), passed, p_left, p_right, detail)


def p4_bridge_check(g1: Graph, v1: int, g2: Graph, v2: int) -> CheckReport:
    """Two-sided variant: the 4-path bridges two graphs through b and c."""
    off = g1.n
    mid = edge_join(g1, v1, path_graph(4), 1)
    left = edge_join(mid, off + 2, g2, v2)
    right = rewire_p4_bridge(left, off, off + 1, off + 2, off + 3)
    p_left = indpoly(left)
    p_right = indpoly(right)
    passed = p_left == p_right
    detail = ""
    if (
        is_claw_free(g1)
        and is_claw_free(g2)
        and is_simplicial(g1, v1)
        and is_simplicial(g2, v2)
    ):
        claw = find_claw(right)
        uni = unimodality(p_left).is_unimodal
        passed = passed and claw is None and uni
        detail = "claw-free case"
    return CheckReport(
        "p4-rewire-two-sided", (g1.n, v1, g2.n, v2), passed, p_left, p_right, detail
    )


# -- the 12-vertex double-centipede and its clique-chain twin ---------------------


def _clique_core() -> Tuple[Graph, int, int]:
    """K4 edge-joined to K3; returns (core, K4 attach point, K3 attach point)."""
    core = edge_join(complete_graph(4), 3, complete_graph(3), 0)
    return core, 0, 5


def q2_graph() -> Graph:
    """The clique-chain twin of gmn(2, 4): (K4-K3 join) + K2 + 3 isolated."""
    core, _, _ = _clique_core()
    return disjoint_union_all([core, complete_graph(2), empty_graph(3)])


Q2_K3_ATTACH = 5
Q2_K4_ATTACH = 0
G24_LONG_END = 7  # last spine vertex of the length-4 side of gmn(2, 4)
G24_SHORT_JOIN = 1  # bridged spine vertex of the length-2 side


def g24_checks() -> List[CheckReport]:
    """The substitution identities around gmn(2, 4) and its clique-chain twin."""
    g24 = gmn_graph(2, 4)
    q2 = q2_graph()
    base = tree_dp(g24)
    twin = indpoly(q2)
    factored = ONE_PLUS_X**3 * ONE_PLUS_2X * IntPoly((1, 7, 11))
    out = [
        CheckReport(
            "g24-clique-chain-twin",
            (),
            base == twin == factored and unimodality(base).is_unimodal,
            base,
            twin,
            f"factored={factored.render()}",
        )
    ]

    # One-sided extension: any graph hung off the long spine end may be moved
    # to the free triangle vertex of the twin without changing the polynomial.
    h = complete_graph(3)
    g_ext = edge_join(g24, G24_LONG_END, h, 0)
    l_ext = edge_join(q2, Q2_K3_ATTACH, h, 0)
    p_g = indpoly(g_ext)
    p_l = indpoly(l_ext)
    out.append(
        CheckReport(
            "g24-one-sided-extension",
            ("K3",),
            p_g == p_l and find_claw(l_ext) is None and unimodality(p_g).is_unimodal,
            p_g,
            p_l,
        )
    )

    # Two-sided extension: a second graph hangs off the short side's bridged
    # spine vertex and moves to a free K4 vertex of the twin.
    g_both = edge_join(g_ext, G24_SHORT_JOIN, complete_graph(2), 0)
    l_both = edge_join(l_ext, Q2_K4_ATTACH, complete_graph(2), 0)
    p_gb = indpoly(g_both)
    p_lb = indpoly(l_both)
    out.append(
        CheckReport(
            "g24-two-sided-extension",
            ("K3", "K2"),
            p_gb == p_lb
            and find_claw(l_both) is None
            and unimodality(p_gb).is_unimodal,
            p_gb,
            p_lb,
        )
    )
    return out


# -- claw-free twins for the whole two-parameter family ---------------------------


def gmn_claw_free_equivalent(m: int, n: int) -> Tuple[Graph, str]:
    """A claw-free graph with the same polynomial as gmn(m, n).

    For one side of length >= 4 the twin is the clique-chain core with the
    remaining centipede tails folded into triangle chains by repeated
    4-path rewiring (each rewire is polynomial-preserving by construction).
    The three small corners get explicit twins.
    """
    if m < 2 or n < 2:
        raise ValueError("both parameters must be at least 2")
    if m > n:
        m, n = n, m
    if (m, n) == (2, 2):
        return (
            disjoint_union(triangle_chain(2), empty_graph(2)),
            "triangle-chain(2) + 2K1",
        )
    if (m, n) == (2, 3):
        twin = disjoint_union_all(
            [
                edge_join(complete_graph(4), 0, complete_graph(2), 0),
                complete_graph(2),
                empty_graph(2),
            ]
        )
        return twin, "K4-K2 join + K2 + 2K1"
    if (m, n) == (3, 3):
        prism = build(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        twin = disjoint_union_all(
            [prism, complete_graph(2), complete_graph(2), empty_graph(2)]
        )
        return twin, "triangular prism + 2K2 + 2K1"

    core, k4_attach, k3_attach = _clique_core()
    g = core
    tails = []
    for length, attach in ((m - 2, k4_attach), (n - 4, k3_attach)):
        if length > 0:
            offset = g.n
            g = edge_join(g, attach, centipede(length), 0)
            tails.append((offset, length))
    folds = 0
    for offset, length in tails:
        spine = [offset + i for i in range(length)]
        teeth = [offset + length + i for i in range(length)]
        for i in range(0, length - 1, 2):
            g = rewire_p4_bridge(g, teeth[i + 1], spine[i + 1], spine[i], teeth[i])
            folds += 1
    twin = disjoint_union_all([g, complete_graph(2), empty_graph(3)])
    return twin, f"clique-chain core, {folds} tail fold(s)"


def gmn_check(m: int, n: int) -> CheckReport:
    """Polynomial equality with the claw-free twin, plus its claw-freeness."""
    g = gmn_graph(m, n)
    lhs = tree_dp(g)
    twin, description = gmn_claw_free_equivalent(m, n)
    rhs = indpoly(twin)
    claw = find_claw(twin)
    rep = unimodality(lhs)
    passed = lhs == rhs and claw is None and rep.is_unimodal
    detail = f"{description}; modes={rep.modes}"
    if claw is not None:
        detail += f"; claw at {claw}"
    return CheckReport("gmn-claw-free-twin", (m, n), passed, lhs, rhs, detail)


# -- equal-polynomial pairs with opposite well-coveredness --------------------------


def wc_pair_construction(
    l1: Graph, v1: int, l2: Graph, v2: int
) -> Tuple[Graph, Graph, CheckReport]:
    """Build the join-sum pair and check it: equal polynomials, opposite verdicts.

    Both seed graphs must be well covered and the bridge must add their
    stability numbers.  The first output joins the bridge graph to the
    leftover pieces plus two isolated vertices; the second joins the
    disjoint seeds to the leftovers plus an edge.
    """
    if not is_well_covered(l1) or not is_well_covered(l2):
        raise ValueError("both seed graphs must be well covered")
    bridged = edge_join(l1, v1, l2, v2)
    if stability_number(bridged) != stability_number(l1) + stability_number(l2):
        raise ValueError("stability numbers must add across the bridge")
    h1, _ = delete_closed_neighborhood(l1, v1)
    h2, _ = delete_closed_neighborhood(l2, v2)
    g1 = zykov_sum(bridged, disjoint_union_all([h1, h2, empty_graph(2)]))
    g2 = zykov_sum(
        disjoint_union(l1, l2), disjoint_union_all([h1, h2, complete_graph(2)])
    )
    p1 = indpoly(g1)
    p2 = indpoly(g2)
    wc1 = is_well_covered(g1)
    wc2 = is_well_covered(g2)
    report = CheckReport(
        "wc-pair-construction",
        (l1.n, v1, l2.n, v2),
        p1 == p2 and wc1 and not wc2,
        p1,
        p2,
        f"wc={wc1},{wc2}",
    )
    return g1, g2, report


def known_twin_pairs() -> List[CheckReport]:
    """Two fixed equal-polynomial pairs with mixed well-coveredness.

    A five-vertex chair tree shares its polynomial with a square plus an
    isolated vertex; a six-vertex join construction shares its polynomial
    with a doubled-edge join.  Only one graph of each pair is well covered.
    """
    chair = build(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    square_k1 = build(5, [(0, 1), (1, 2), (2, 3), (0, 3)])
    p_chair = indpoly(chair)
    p_square = indpoly(square_k1)
    expected_a = IntPoly((1, 5, 6, 2))
    r1 = CheckReport(
        "twin-pair-chair-square",
        (),
        p_chair == p_square == expected_a
        and not is_well_covered(chair)
        and is_well_covered(square_k1),
        p_chair,
        p_square,
        "tree side is not well covered",
    )
    hexa = build(
        6,
        [
            (0, 3), (1, 4), (2, 5),
            (0, 1), (1, 2), (3, 4), (4, 5),
            (0, 4), (1, 5), (1, 3), (2, 4),
        ],
    )
    fan = build(
        6,
        [(0, 1), (1, 2), (2, 3)]
        + [(i, 4) for i in range(4)]
        + [(i, 5) for i in range(4)],
    )
    p_hexa = indpoly(hexa)
    p_fan = indpoly(fan)
    expected_b = IntPoly((1, 6, 4))
    r2 = CheckReport(
        "twin-pair-join-sum",
        (),
        p_hexa == p_fan == expected_b
        and not is_well_covered(hexa)
        and is_well_covered(fan),
        p_hexa,
        p_fan,
        "only the path-join side is well covered",
    )
    return [r1, r2]


# -- exhaustive conjecture sweeps -----------------------------------------------


@dataclass
class EqualPolySearchResult:
    """Well-covered trees vs all small graphs sharing their polynomial."""

    max_tree_order: int
    max_graph_order: int
    well_covered_trees: int
    graphs: int
    pairs_examined: int
    confirmations: int
    counterexamples: List[Tuple[Graph, Graph, IntPoly]] = field(default_factory=list)


def search_conjecture_wc_transfer(
    max_tree_order: int, max_graph_order: int
) -> EqualPolySearchResult:
    """Hunt for a non-well-covered graph matching a well-covered tree's polynomial.

    Every equal-polynomial pair (T, G) with T a well-covered tree is
    examined; a pair with G not well covered would be a counterexample and
    is returned, never raised.
    """
    if not 1 <= max_tree_order <= 10:
        raise ValueError("tree order must be between 1 and 10")
    if not 1 <= max_graph_order <= 7:
        raise ValueError("graph order must be between 1 and 7")
    trees = [t for t in trees_up_to(max_tree_order) if is_well_covered_tree(t)]
    by_poly = defaultdict(list)
    graphs = graphs_up_to(max_graph_order)
    for g in graphs:
        by_poly[indpoly(g)].append(g)
    result = EqualPolySearchResult(
        max_tree_order, max_graph_order, len(trees), len(graphs), 0, 0
    )
    for t in trees:
        p = tree_dp(t)
        for g in by_poly.get(p, ()):
            result.pairs_examined += 1
            if is_well_covered(g):
                result.confirmations += 1
            else:
                result.counterexamples.append((t, g, p))
    return result


@dataclass
class UnimodalitySweepResult:
    """Unimodality audit of every small well-covered graph."""

    max_order: int
    graphs_examined: int
    well_covered: int
    violations: List[Tuple[Graph, IntPoly, Tuple[int, int, int]]] = field(
        default_factory=list
    )


def sweep_wellcovered_unimodality(max_order: int) -> UnimodalitySweepResult:
    """Check unimodality over all well-covered graphs up to the order bound."""
    if not 1 <= max_order <= 7:
        raise ValueError("order must be between 1 and 7")
    result = UnimodalitySweepResult(max_order, 0, 0)
    for g in graphs_up_to(max_order):
        result.graphs_examined += 1
        if not is_well_covered(g):
            continue
        result.well_covered += 1
        rep = unimodality(indpoly(g))
        if not rep.is_unimodal:
            result.violations.append((g, indpoly(g), rep.violation))
    return result


# -- named suites (drive the CLI) -------------------------------------------------


def suite_spiders(n_max: int) -> List[CheckReport]:
    if n_max < 2:
        raise ValueError("spider suite needs n >= 2")
    return [spider_check(n) for n in range(2, n_max + 1)]


def suite_triangle_chains(n_max: int) -> List[CheckReport]:
    if n_max < 2:
        raise ValueError("triangle-chain suite needs n >= 2")
    out: List[CheckReport] = []
    for n in range(2, n_max + 1):
        out.append(triangle_chain_recurrence_check(n))
    for n in range(1, n_max + 1):
        out.append(k2_triangle_chain_check(n))
    for n in range(1, min(n_max, 12) + 1):
        out.extend(chain_structure_checks(n, check_well_covered=n <= 6))
    return out


def suite_centipedes(n_max: int) -> List[CheckReport]:
    if n_max < 2:
        raise ValueError("centipede suite needs n >= 2")
    out: List[CheckReport] = []
    for n in range(2, n_max + 1):
        out.extend(centipede_checks(n))
        out.append(centipede_mode_check(n))
    return out


def _random_graph(rng: random.Random, min_n: int = 1, max_n: int = 9) -> Graph:
    n = rng.randint(min_n, max_n)
    density = rng.choice((0.15, 0.3, 0.5, 0.7))
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < density
    ]
    return build(n, edges)


def suite_rewire(seed: int, count: int) -> List[CheckReport]:
    """Randomized 4-path rewiring equalities, reproducible from the seed."""
    if count < 1:
        raise ValueError("count must be positive")
    rng = random.Random(seed)
    out = []
    for i in range(count):
        g1 = _random_graph(rng)
        v1 = rng.randrange(g1.n)
        if i % 2 == 0:
            out.append(p4_rewire_check(g1, v1))
        else:
            g2 = _random_graph(rng)
            v2 = rng.randrange(g2.n)
            out.append(p4_bridge_check(g1, v1, g2, v2))
    return out


def suite_gmn(m: int, n: int) -> List[CheckReport]:
    return [gmn_check(m, n)]


def suite_g24() -> List[CheckReport]:
    return g24_checks()


def suite_pairs() -> List[CheckReport]:
    """Seeded pair constructions plus the fixed twin pairs."""
    seeds = [
        (complete_graph(2), 0, complete_graph(2), 0),
        (complete_graph(3), 0, complete_graph(2), 0),
        (complete_graph(3), 0, complete_graph(3), 0),
        (complete_graph(4), 0, complete_graph(2), 1),
    ]
    out = []
    for l1, v1, l2, v2 in seeds:
        _, _, report = wc_pair_construction(l1, v1, l2, v2)
        out.append(report)
    out.extend(known_twin_pairs())
    return out
