"""Command-line frontend: parse edge lists, run the algorithms, emit results.

Input is the edge-list format (header `n m`, then `u v w` lines, `#` comments
allowed).  Rationals are printed as `p/q`, never as floats.  Exit codes:
0 success, 2 malformed or unusable input, 3 brute-force size-guard refusal.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .arboricity import ArboricityError, compute_arboricity
from .densecore import find_star_full, verify_core_explain
from .dircut import PipelineConfig
from .graph import (
    EdgeListError,
    GraphError,
    WeightedGraph,
    connected_components,
    induced_subgraph,
    parse_edge_list,
    skew_density,
)
from .hierarchy import HierarchyNode, HierarchyTree, build_hierarchy, strength
from .loads import entropy_certificate, entropy_value, ideal_loads
from .oracle import (
    SizeGuardError,
    brute_dense_core,
    brute_hierarchy,
    brute_max_skew_density,
    brute_min_ratio_cut,
    frank_wolfe_entropy,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_SIZE_GUARD = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_BAD_INPUT):
        super().__init__(message)
        self.code = code


def rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def vertex_list(vertices) -> str:
    return ",".join(str(v) for v in sorted(vertices))


def hierarchy_to_json(tree: HierarchyTree) -> dict:
    def encode(node: HierarchyNode) -> dict:
        data: dict = {"vertices": sorted(node.vertex_set)}
        if node.sigma is not None:
            data["sigma"] = rational(node.sigma)
        data["children"] = [encode(c) for c in node.children]
        return data

    return encode(tree.root)


def hierarchy_from_json(data: dict, graph: WeightedGraph) -> HierarchyTree:
    def decode(entry: dict) -> HierarchyNode:
        children = tuple(decode(c) for c in entry.get("children", []))
        sigma = parse_rational(entry["sigma"]) if "sigma" in entry else None
        return HierarchyNode(frozenset(entry["vertices"]), children, sigma)

    return HierarchyTree(root=decode(data), graph=graph)


def hierarchy_to_text(tree: HierarchyTree) -> str:
    lines: list[str] = []

    def walk(node: HierarchyNode, depth: int):
        label = "{" + vertex_list(node.vertex_set) + "}"
        if node.sigma is not None:
            label += f" sigma={rational(node.sigma)}"
        lines.append("  " * depth + "- " + label)
        for child in node.children:
            walk(child, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines)


def hierarchy_to_dot(tree: HierarchyTree) -> str:
    lines = ["digraph hierarchy {"]
    ids: dict[frozenset, int] = {}

    def walk(node: HierarchyNode) -> int:
        nid = ids.setdefault(node.vertex_set, len(ids))
        label = "{" + vertex_list(node.vertex_set) + "}"
        if node.sigma is not None:
            label += f"\\nsigma={rational(node.sigma)}"
        lines.append(f'  n{nid} [label="{label}"];')
        for child in node.children:
            cid = walk(child)
            lines.append(f"  n{nid} -> n{cid};")
        return nid

    walk(tree.root)
    lines.append("}")
    return "\n".join(lines)


def _read_graph(path: str) -> WeightedGraph:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except EdgeListError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _require_connected(graph: WeightedGraph, what: str):
    components = connected_components(graph)
    if len(components) > 1:
        listed = "; ".join("{" + vertex_list(c) + "}" for c in sorted(components, key=min))
        raise CliError(
            f"{what} needs a connected graph; components: {listed} "
            "(use --per-component where supported)"
        )


def _parse_set(text: str, n: int) -> frozenset[int]:
    try:
        vertices = frozenset(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise CliError(f"--set must be a comma-separated vertex list, got {text!r}") from None
    if not vertices:
        raise CliError("--set must name at least one vertex")
    bad = [v for v in vertices if not 0 <= v < n]
    if bad:
        raise CliError(f"--set vertices out of range 0..{n - 1}: {sorted(bad)}")
    return vertices


def _pipeline_config(args) -> PipelineConfig:
    eps = Fraction(args.epsilon)
    return PipelineConfig(epsilon=eps)


def _emit(args, text_value: str, json_value) -> None:
    if args.format == "json":
        print(json.dumps(json_value, indent=2, sort_keys=False))
    else:
        print(text_value)


def _cmd_arboricity(args) -> int:
    graph = _read_graph(args.file)
    if graph.m == 0:
        _emit(
            args,
            "arboricity: 0\nfractional: 0/1\n# edgeless input: zero forests cover it",
            {"arboricity": 0, "fractional": "0/1", "note": "edgeless input"},
        )
        return EXIT_OK
    if args.per_component:
        pieces = []
        for comp in sorted(connected_components(graph), key=min):
            sub, _ = induced_subgraph(graph, comp)
            pieces.append((comp, compute_arboricity(sub)))
        arb = max(result.arboricity for _, result in pieces)
        frac = max(result.fractional for _, result in pieces)
        lines = [f"arboricity: {arb}", f"fractional: {rational(frac)}"]
        comp_json = []
        for comp, result in pieces:
            lines.append(
                f"component {{{vertex_list(comp)}}}: arboricity {result.arboricity}, "
                f"fractional {rational(result.fractional)}"
            )
            comp_json.append(
                {
                    "vertices": sorted(comp),
                    "arboricity": result.arboricity,
                    "fractional": rational(result.fractional),
                }
            )
        _emit(
            args,
            "\n".join(lines),
            {"arboricity": arb, "fractional": rational(frac), "components": comp_json},
        )
        return EXIT_OK
    _require_connected(graph, "arboricity")
    result = compute_arboricity(graph)
    _emit(
        args,
        f"arboricity: {result.arboricity}\nfractional: {rational(result.fractional)}",
        {"arboricity": result.arboricity, "fractional": rational(result.fractional)},
    )
    return EXIT_OK


def _build_tree(args, graph: WeightedGraph) -> HierarchyTree:
    rng = random.Random(args.seed)
    return build_hierarchy(
        graph, mode=args.mode, rng=rng, config=_pipeline_config(args)
    )


def _cmd_strength(args) -> int:
    graph = _read_graph(args.file)
    if args.per_component:
        lines = []
        values = []
        comp_json = []
        for comp in sorted(connected_components(graph), key=min):
            sub, _ = induced_subgraph(graph, comp)
            if sub.n < 2:
                lines.append(f"component {{{vertex_list(comp)}}}: strength undefined")
                comp_json.append({"vertices": sorted(comp), "strength": None})
                continue
            value = strength(_build_tree(args, sub))
            values.append(value)
            lines.append(f"component {{{vertex_list(comp)}}}: strength {rational(value)}")
            comp_json.append({"vertices": sorted(comp), "strength": rational(value)})
        if not values:
            raise CliError("no component has 2 or more vertices")
        head = f"strength: {rational(min(values))}"
        _emit(
            args,
            "\n".join([head] + lines),
            {"strength": rational(min(values)), "components": comp_json},
        )
        return EXIT_OK
    _require_connected(graph, "strength")
    if graph.n < 2:
        raise CliError("strength needs at least 2 vertices")
    value = strength(_build_tree(args, graph))
    _emit(args, f"strength: {rational(value)}", {"strength": rational(value)})
    return EXIT_OK


def _cmd_hierarchy(args) -> int:
    graph = _read_graph(args.file)
    _require_connected(graph, "hierarchy")
    tree = _build_tree(args, graph)
    if args.format == "dot":
        print(hierarchy_to_dot(tree))
    elif args.format == "json":
        print(json.dumps(hierarchy_to_json(tree), indent=2))
    else:
        print(hierarchy_to_text(tree))
    return EXIT_OK


def _cmd_ideal_loads(args) -> int:
    graph = _read_graph(args.file)
    _require_connected(graph, "ideal loads")
    tree = _build_tree(args, graph)
    loads = ideal_loads(graph, tree)
    lines = []
    edges_json = []
    for idx, (u, v, w) in enumerate(graph.edges):
        lines.append(
            f"edge {u} {v} weight {w}: load {rational(loads.per_edge[idx])} "
            f"(unit {rational(loads.unit_per_edge[idx])})"
        )
        edges_json.append(
            {
                "u": u,
                "v": v,
                "weight": w,
                "load": rational(loads.per_edge[idx]),
                "unit_load": rational(loads.unit_per_edge[idx]),
            }
        )
    total = sum(loads.per_edge, Fraction(0))
    lines.append(f"sum: {rational(total)}")
    _emit(args, "\n".join(lines), {"edges": edges_json, "sum": rational(total)})
    return EXIT_OK


def _cmd_densest(args) -> int:
    graph = _read_graph(args.file)
    _require_connected(graph, "densest set search")
    k = args.k if args.k is not None else max(1, graph.n)
    rng = random.Random(args.seed)
    result = find_star_full(
        graph, k, mode=args.mode, rng=rng, config=_pipeline_config(args)
    )
    density = skew_density(graph, result.candidate)
    _emit(
        args,
        f"densest: {vertex_list(result.candidate)}\ndensity: {rational(density)}",
        {"vertices": sorted(result.candidate), "density": rational(density)},
    )
    return EXIT_OK


def _cmd_verify_core(args) -> int:
    graph = _read_graph(args.file)
    candidate = _parse_set(args.set, graph.n)
    ok, reason = verify_core_explain(graph, graph.n, candidate)
    if ok:
        _emit(args, "true", {"dense_core": True})
    else:
        _emit(args, f"false ({reason})", {"dense_core": False, "reason": reason})
    return EXIT_OK


def _cmd_entropy_check(args) -> int:
    graph = _read_graph(args.file)
    _require_connected(graph, "entropy check")
    tree = _build_tree(args, graph)
    loads = ideal_loads(graph, tree)
    certificate = entropy_certificate(graph, tree)
    pairs = loads.unit_marginal_pairs()
    ideal_entropy = entropy_value((x for x, _ in pairs), (w for _, w in pairs))
    fw = frank_wolfe_entropy(graph, args.iterations, seed=args.seed)
    gap = fw.value - ideal_entropy
    min_y = min((y for s, y in certificate.y.items() if s != tree.root.vertex_set), default=0.0)
    text = "\n".join(
        [
            f"ideal entropy objective: {ideal_entropy:.12f}",
            f"frank-wolfe objective:   {fw.value:.12f}",
            f"gap (fw - ideal):        {gap:.3e}",
            f"min non-root dual value: {min_y:.3e}",
        ]
    )
    _emit(
        args,
        text,
        {
            "ideal": ideal_entropy,
            "frank_wolfe": fw.value,
            "gap": gap,
            "min_dual": min_y,
        },
    )
    return EXIT_OK


def _cmd_oracle(args) -> int:
    graph = _read_graph(args.file)
    sub = args.oracle_command
    if sub == "min-ratio-cut":
        ratio, cut = brute_min_ratio_cut(graph)
        sides = sorted((sorted(side) for side in cut.sides), key=lambda s: s[0])
        text = f"ratio: {rational(ratio)}\nsides: " + "; ".join(
            "{" + vertex_list(side) + "}" for side in sides
        )
        _emit(args, text, {"ratio": rational(ratio), "sides": sides})
    elif sub == "max-skew-density":
        density, vertices = brute_max_skew_density(graph)
        _emit(
            args,
            f"density: {rational(density)}\nvertices: {vertex_list(vertices)}",
            {"density": rational(density), "vertices": sorted(vertices)},
        )
    elif sub == "dense-core":
        if args.set is None:
            raise CliError("oracle dense-core needs --set")
        candidate = _parse_set(args.set, graph.n)
        verdict = brute_dense_core(graph, candidate)
        _emit(args, "true" if verdict else "false", {"dense_core": verdict})
    elif sub == "hierarchy":
        _require_connected(graph, "hierarchy oracle")
        tree = brute_hierarchy(graph)
        if args.format == "json":
            print(json.dumps(hierarchy_to_json(tree), indent=2))
        elif args.format == "dot":
            print(hierarchy_to_dot(tree))
        else:
            print(hierarchy_to_text(tree))
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown oracle subcommand {sub!r}")
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("file", help="edge-list input file")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    parser.add_argument(
        "--mode",
        choices=("exact", "randomized"),
        default="exact",
        help="exact subroutines or the randomized sampling pipeline",
    )
    parser.add_argument(
        "--format", choices=("text", "json", "dot"), default="text", help="output format"
    )
    parser.add_argument(
        "--epsilon",
        default="0.1",
        help="accuracy parameter of the randomized pipeline (default 0.1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laminar",
        description=(
            "Exact cut hierarchies, strength, arboricity, and ideal edge loads "
            "of weighted undirected graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arboricity", help="integer and fractional arboricity")
    _add_common(p)
    p.add_argument(
        "--per-component",
        action="store_true",
        help="handle disconnected input by maximizing over components",
    )
    p.set_defaults(func=_cmd_arboricity)

    p = sub.add_parser("strength", help="minimum cut ratio over all multiway cuts")
    _add_common(p)
    p.add_argument(
        "--per-component",
        action="store_true",
        help="report per-component strengths on disconnected input",
    )
    p.set_defaults(func=_cmd_strength)

    p = sub.add_parser("hierarchy", help="canonical cut hierarchy")
    _add_common(p)
    p.set_defaults(func=_cmd_hierarchy)

    p = sub.add_parser("ideal-loads", help="per-edge ideal loads")
    _add_common(p)
    p.set_defaults(func=_cmd_ideal_loads)

    p = sub.add_parser("densest", help="maximum skew-densest vertex set")
    _add_common(p)
    p.add_argument("--k", type=int, default=None, help="size bound for the search")
    p.set_defaults(func=_cmd_densest)

    p = sub.add_parser("verify-core", help="dense-core check for a vertex set")
    _add_common(p)
    p.add_argument("--set", required=True, help="comma-separated vertex list")
    p.set_defaults(func=_cmd_verify_core)

    p = sub.add_parser(
        "entropy-check", help="compare ideal loads against the entropy oracle"
    )
    _add_common(p)
    p.add_argument(
        "--iterations", type=int, default=4000, help="Frank-Wolfe iterations"
    )
    p.set_defaults(func=_cmd_entropy_check)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    p.add_argument(
        "oracle_command",
        choices=("min-ratio-cut", "max-skew-density", "dense-core", "hierarchy"),
    )
    _add_common(p)
    p.add_argument("--set", default=None, help="comma-separated vertex list")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except (GraphError, ArboricityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
