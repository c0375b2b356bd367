"""Command-line front end: gen | poly | check | verify | search.

Graphs travel as plain-text edge lists; verification output is one line
per check, or one JSON object per line with --format jsonl.  Exit codes:
0 success / "true", 1 "false" verdict, 2 usage or parse error, 3 a size
bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .compute import Method, indpoly
from .graphs import (
    BoundExceededError,
    FamilySpec,
    Graph,
    build,
    find_claw,
    generate,
    is_simplicial,
    is_tree,
    is_well_covered,
    is_well_covered_tree,
    enumerate_maximal_stable_sets,
)
from .identities import (
    CheckReport,
    search_conjecture_wc_transfer,
    suite_centipedes,
    suite_g24,
    suite_gmn,
    suite_pairs,
    suite_rewire,
    suite_spiders,
    suite_triangle_chains,
    sweep_wellcovered_unimodality,
)
from .poly import unimodality

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


# -- edge-list file format ----------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" plus m edge lines; '#' lines are comments."""
    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty edge-list file")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges but {len(rows) - 1} lines follow")
    edges = []
    seen = set()
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {row!r}")
        u, v = int(parts[0]), int(parts[1])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
    return build(n, edges)


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


# -- report rendering ---------------------------------------------------------


def _emit_reports(reports: Sequence[CheckReport], fmt: str) -> None:
    for r in reports:
        if fmt == "jsonl":
            obj = {
                "name": r.name,
                "params": list(r.params),
                "status": r.status,
            }
            if r.lhs is not None:
                obj["lhs"] = [str(c) for c in r.lhs.coeffs]
            if r.rhs is not None:
                obj["rhs"] = [str(c) for c in r.rhs.coeffs]
            if r.detail:
                obj["detail"] = r.detail
            print(json.dumps(obj))
        else:
            print(r.render())


def _family_spec(name: str, params: List[int]) -> FamilySpec:
    return FamilySpec(kind=name, params=tuple(params))


# -- subcommands ----------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate(_family_spec(args.family, args.params))
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"vertices={g.n} edges={g.edge_count} -> {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_poly(args: argparse.Namespace) -> int:
    if args.family:
        g = generate(_family_spec(args.family[0], [int(p) for p in args.family[1:]]))
    elif args.input:
        g = _load_graph(args.input)
    else:
        raise ValueError("either an input file or --family is required")
    method = Method(args.method)
    p = indpoly(g, method)
    print(" ".join(str(c) for c in p.coeffs))
    print(f"degree: {p.degree}")
    print(f"alpha: {p.degree}")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    which = args.property
    if which == "unimodal":
        rep = unimodality(indpoly(g))
        if rep.is_unimodal:
            lo, hi = rep.modes
            print(f"unimodal: true mode={lo}" + ("" if lo == hi else f"..{hi}"))
            return EXIT_OK
        print(f"unimodal: false violation={rep.violation}")
        return EXIT_FALSE
    if which == "well-covered":
        sets = enumerate_maximal_stable_sets(g)
        sizes = sorted({len(s) for s in sets})
        if len(sizes) <= 1:
            print(f"well-covered: true alpha={sizes[0] if sizes else 0}")
            return EXIT_OK
        print(f"well-covered: false sizes={set(sizes)}")
        return EXIT_FALSE
    if which == "claw-free":
        claw = find_claw(g)
        if claw is None:
            print("claw-free: true")
            return EXIT_OK
        print(f"claw-free: false witness={claw}")
        return EXIT_FALSE
    if which == "tree":
        verdict = is_tree(g)
        print(f"tree: {'true' if verdict else 'false'}")
        return EXIT_OK if verdict else EXIT_FALSE
    if which == "well-covered-tree":
        verdict = is_well_covered_tree(g)
        print(f"well-covered-tree: {'true' if verdict else 'false'}")
        return EXIT_OK if verdict else EXIT_FALSE
    if which == "simplicial":
        if args.vertex is None:
            raise ValueError("simplicial check needs a vertex argument")
        verdict = is_simplicial(g, args.vertex)
        print(f"simplicial({args.vertex}): {'true' if verdict else 'false'}")
        return EXIT_OK if verdict else EXIT_FALSE
    raise ValueError(f"unknown property {which!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite
    params = [int(p) for p in args.params]

    def need(k: int) -> None:
        if len(params) != k:
            raise ValueError(f"suite {suite!r} takes {k} parameter(s)")

    if suite == "spiders":
        need(1)
        reports = suite_spiders(params[0])
    elif suite == "triangle-chains":
        need(1)
        reports = suite_triangle_chains(params[0])
    elif suite == "centipedes":
        need(1)
        reports = suite_centipedes(params[0])
    elif suite == "rewire":
        need(2)
        reports = suite_rewire(params[0], params[1])
    elif suite == "gmn":
        need(2)
        reports = suite_gmn(params[0], params[1])
    elif suite == "g24":
        need(0)
        reports = suite_g24()
    elif suite == "pairs":
        need(0)
        reports = suite_pairs()
    else:
        raise ValueError(f"unknown suite {suite!r}")
    _emit_reports(reports, args.format)
    hard_failures = [r for r in reports if not r.passed and not r.conjecture]
    return EXIT_FALSE if hard_failures else EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    which = args.which
    params = [int(p) for p in args.params]
    if which == "conjecture51":
        if len(params) != 2:
            raise ValueError("conjecture51 takes TREE_ORDER GRAPH_ORDER")
        result = search_conjecture_wc_transfer(params[0], params[1])
        print(
            f"well-covered trees: {result.well_covered_trees} "
            f"graphs: {result.graphs} pairs: {result.pairs_examined}"
        )
        print(f"confirmations: {result.confirmations}")
        print(f"counterexamples: {len(result.counterexamples)}")
        for tree, graph, poly in result.counterexamples:
            print(
                f"FINDING tree={tree.edges()} graph={graph.edges()} "
                f"poly={poly.render()}"
            )
        return EXIT_OK
    if which == "unimodality":
        if len(params) != 1:
            raise ValueError("unimodality takes MAX_ORDER")
        result = sweep_wellcovered_unimodality(params[0])
        print(
            f"graphs: {result.graphs_examined} "
            f"well-covered: {result.well_covered}"
        )
        print(f"violations: {len(result.violations)}")
        for graph, poly, witness in result.violations:
            print(
                f"FINDING graph={graph.edges()} poly={poly.render()} "
                f"violation={witness}"
            )
        return EXIT_OK
    raise ValueError(f"unknown search {which!r}")


# -- entry point -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indpoly",
        description="Exact independence polynomials of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a family instance as an edge list")
    gen.add_argument("family", choices=sorted({
        "complete", "path", "cycle", "star", "multipartite", "spider",
        "centipede", "triangle-chain", "k2-triangle-chain", "gmn",
    }))
    gen.add_argument("params", nargs="+", type=int)
    gen.add_argument("--out", help="output path (default: stdout)")

    poly = sub.add_parser("poly", help="print I(G;x) coefficients, degree, alpha")
    poly.add_argument("input", nargs="?", help="edge-list file")
    poly.add_argument(
        "--family",
        nargs="+",
        help="family name plus parameters instead of a file",
    )
    poly.add_argument(
        "--method",
        default="auto",
        choices=[m.value for m in Method],
    )

    check = sub.add_parser("check", help="evaluate a structural predicate")
    check.add_argument("input", help="edge-list file")
    check.add_argument(
        "property",
        choices=[
            "unimodal",
            "well-covered",
            "claw-free",
            "tree",
            "well-covered-tree",
            "simplicial",
        ],
    )
    check.add_argument("vertex", nargs="?", type=int)

    verify = sub.add_parser("verify", help="run a named identity suite")
    verify.add_argument(
        "suite",
        choices=[
            "spiders",
            "triangle-chains",
            "centipedes",
            "rewire",
            "gmn",
            "g24",
            "pairs",
        ],
    )
    verify.add_argument("params", nargs="*")
    verify.add_argument("--format", default="text", choices=["text", "jsonl"])

    search = sub.add_parser("search", help="run an exhaustive conjecture sweep")
    search.add_argument("which", choices=["conjecture51", "unimodality"])
    search.add_argument("params", nargs="*")
    search.add_argument("--format", default="text", choices=["text", "jsonl"])

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "poly": _cmd_poly,
        "check": _cmd_check,
        "verify": _cmd_verify,
        "search": _cmd_search,
    }
    try:
        return handlers[args.command](args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND if args.command == "poly" else EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
