"""Exact independence polynomials of small graphs.

Immutable graphs, arbitrary-precision polynomial arithmetic, redundant
computation methods that check each other, executable identity checks,
and exhaustive small-order conjecture sweeps.
"""

from .compute import (
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
from .graphs import (
    BoundExceededError,
    FamilySpec,
    Graph,
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
    empty_graph,
    enumerate_maximal_stable_sets,
    find_claw,
    generate,
    gmn_graph,
    is_claw_free,
    is_simplicial,
    is_pendant,
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
from .identities import (
    CheckReport,
    centipede_mode_check,
    centipede_mode_f,
    gmn_check,
    search_conjecture_wc_transfer,
    spider_check,
    spider_closed_form,
    spider_mode,
    sweep_wellcovered_unimodality,
)
from .poly import (
    IntPoly,
    UnimodalityReport,
    degree_one_product_mode,
    fibonacci_poly,
    unimodality,
)

__version__ = "0.1.0"
