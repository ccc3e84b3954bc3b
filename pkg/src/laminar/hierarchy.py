"""Canonical cut hierarchy: laminar min-ratio cuts as a rooted tree.

Construction contracts one star set at a time: find a candidate dense set,
verify it is a dense core, contract, repeat.  Each accepted set becomes an
internal node whose sigma is the set's skew-density in the graph it was
contracted from, which equals the cut ratio of the all-singleton min-ratio
cut of that node's contracted subgraph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .densecore import PipelineConfig, find_star, verify_core
from .graph import GraphError, MultiwayCut, WeightedGraph, contract, skew_density


@dataclass(frozen=True)
class HierarchyNode:
    """A laminar set: its children partition it; leaves are singletons.

    sigma is the cut ratio of the maximal min-ratio cut of the induced
    subgraph on vertex_set; leaves carry None.
    """

    vertex_set: frozenset[int]
    children: tuple["HierarchyNode", ...]
    sigma: Fraction | None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def walk(self) -> Iterator["HierarchyNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class HierarchyTree:
    root: HierarchyNode
    graph: WeightedGraph
    node_by_set: dict[frozenset[int], HierarchyNode] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        index = {node.vertex_set: node for node in self.root.walk()}
        object.__setattr__(self, "node_by_set", index)

    def nodes(self) -> Iterator[HierarchyNode]:
        return self.root.walk()

    def internal_nodes(self) -> Iterator[HierarchyNode]:
        return (node for node in self.root.walk() if not node.is_leaf)


def _leaf(v: int) -> HierarchyNode:
    return HierarchyNode(frozenset({v}), (), None)


def build_hierarchy(
    graph: WeightedGraph,
    *,
    mode: str = "exact",
    rng: random.Random | None = None,
    config: PipelineConfig | None = None,
    max_restarts: int = 3,
) -> HierarchyTree:
    """Build the canonical cut hierarchy by star-set contraction.

    mode "exact" wires every internal cut subroutine to the exhaustive exact
    implementations; "randomized" exercises the sparsify/pack/sample pipeline
    and, if a full size sweep accepts nothing after max_restarts fresh RNG
    streams, falls back to exact for that iteration rather than failing.
    """
    if graph.n == 0:
        raise GraphError("hierarchy of the empty graph is undefined")
    if not graph.is_connected():
        raise GraphError("hierarchy is defined for connected graphs")
    if mode not in ("exact", "randomized"):
        raise ValueError(f"unknown mode {mode!r}")
    if rng is None:
        rng = random.Random(0)
    registry: dict[int, HierarchyNode] = {v: _leaf(v) for v in range(graph.n)}
    cur = graph
    while cur.n > 1:
        accepted = _accept_star_set(cur, mode, rng, config, max_restarts)
        sigma = skew_density(cur, accepted)
        children = tuple(
            sorted((registry[v] for v in accepted), key=lambda nd: min(nd.vertex_set))
        )
        merged = HierarchyNode(
            frozenset().union(*(c.vertex_set for c in children)), children, sigma
        )
        cur, cmap = contract(cur, accepted)
        new_registry: dict[int, HierarchyNode] = {}
        rep = cmap.forward[min(accepted)]
        for old, node in registry.items():
            if old in accepted:
                continue
            new_registry[cmap.forward[old]] = node
        new_registry[rep] = merged
        registry = new_registry
    return HierarchyTree(root=registry[0], graph=graph)


def _sweep_sizes(n: int) -> list[int]:
    sizes = []
    k = 2
    while True:
        sizes.append(k)
        if k >= n:
            break
        k *= 2
    return sizes


def _accept_star_set(
    cur: WeightedGraph,
    mode: str,
    rng: random.Random,
    config: PipelineConfig | None,
    max_restarts: int,
) -> frozenset[int]:
    """One outer iteration: sweep doubling sizes until a dense core verifies."""
    attempts = max_restarts if mode == "randomized" else 1
    for attempt in range(attempts + 1):
        attempt_mode = mode if attempt < attempts else "exact"
        cached: frozenset[int] | None = None
        for k in _sweep_sizes(cur.n):
            if attempt_mode == "exact" and cached is not None:
                candidate = cached
            else:
                sub_rng = random.Random(rng.getrandbits(64))
                candidate = find_star(
                    cur, k, mode=attempt_mode, rng=sub_rng, config=config
                )
                if attempt_mode == "exact":
                    cached = candidate
            if k // 2 < len(candidate) <= k and verify_core(cur, k, candidate):
                return candidate
    raise RuntimeError("no star set accepted; exact sweep should always succeed")


def node_sigma(tree: HierarchyTree, vertex_set) -> Fraction:
    node = tree.node_by_set.get(frozenset(vertex_set))
    if node is None:
        raise KeyError(f"no hierarchy node for {sorted(vertex_set)}")
    if node.sigma is None:
        raise ValueError("leaves carry no cut ratio")
    return node.sigma


def strength(tree: HierarchyTree) -> Fraction:
    """Minimum cut ratio over all multiway cuts: the root's sigma."""
    if tree.root.sigma is None:
        raise ValueError("single-vertex graph has no multiway cut")
    return tree.root.sigma


def maximal_min_ratio_cut(tree: HierarchyTree) -> MultiwayCut:
    """The root's children as a multiway cut of the underlying graph."""
    if tree.root.is_leaf:
        raise ValueError("single-vertex graph has no multiway cut")
    return MultiwayCut(tree.graph, [c.vertex_set for c in tree.root.children])


def validate_hierarchy(
    graph: WeightedGraph, tree: HierarchyTree, *, oracle_limit: int = 7
) -> list[str]:
    """Structural checks; on small graphs also compares each internal node's
    children against the brute-force maximal min-ratio cut.  Returns a list of
    violation descriptions, empty when the tree is consistent."""
    violations: list[str] = []
    if tree.root.vertex_set != frozenset(range(graph.n)):
        violations.append("root does not cover the vertex set")
    for node in tree.nodes():
        if node.is_leaf:
            if len(node.vertex_set) != 1:
                violations.append(f"leaf {sorted(node.vertex_set)} is not a singleton")
            if node.sigma is not None:
                violations.append(f"leaf {sorted(node.vertex_set)} carries a ratio")
            continue
        if node.sigma is None:
            violations.append(f"internal node {sorted(node.vertex_set)} lacks a ratio")
        if len(node.children) < 2:
            violations.append(f"internal node {sorted(node.vertex_set)} has < 2 children")
        union: set[int] = set()
        for child in node.children:
            if union & child.vertex_set:
                violations.append(
                    f"children of {sorted(node.vertex_set)} overlap"
                )
            union |= child.vertex_set
            if (
                not child.is_leaf
                and child.sigma is not None
                and node.sigma is not None
                and child.sigma < node.sigma
            ):
                violations.append(
                    f"ratio decreases from {sorted(node.vertex_set)} to "
                    f"{sorted(child.vertex_set)}"
                )
        if union != set(node.vertex_set):
            violations.append(f"children of {sorted(node.vertex_set)} do not partition it")
    if graph.n <= oracle_limit:
        from .graph import induced_subgraph
        from .oracle import brute_min_ratio_cut

        for node in tree.internal_nodes():
            sub, to_orig = induced_subgraph(graph, node.vertex_set)
            if sub.n < 2:
                continue
            ratio, cut = brute_min_ratio_cut(sub)
            expected = {frozenset(to_orig[v] for v in side) for side in cut.sides}
            actual = {c.vertex_set for c in node.children}
            if expected != actual:
                violations.append(
                    f"children of {sorted(node.vertex_set)} are not the maximal "
                    "min-ratio cut"
                )
            if node.sigma != ratio:
                violations.append(
                    f"ratio of {sorted(node.vertex_set)} is {node.sigma}, oracle "
                    f"says {ratio}"
                )
    return violations
