"""Ideal edge loads from the cut hierarchy, and the max-entropy certificate.

Each edge is charged to the deepest hierarchy node containing both endpoints
(the LCA of its leaves); that node's ratio is the total weight charged to it
divided by one less than its child count.  The load of an edge is its weight
over its node's ratio; per unit edge (viewing a weight-c edge as c parallel
unit edges) the load is the reciprocal of the ratio.  These unit loads are
exactly the entropy-maximizing point of the spanning tree polytope, which the
logarithmic dual certificate below witnesses.

Logs and exponentials are the only floating-point surface of the package;
everything upstream of them stays rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import WeightedGraph
from .hierarchy import HierarchyNode, HierarchyTree

RECONSTRUCTION_TOL = 1e-9


class LoadsError(ValueError):
    """The tree does not structurally fit the graph."""


@dataclass(frozen=True)
class IdealLoads:
    """Per-edge loads plus the per-node ratios and edge assignments."""

    graph: WeightedGraph
    tree: HierarchyTree
    per_edge: tuple[Fraction, ...]
    unit_per_edge: tuple[Fraction, ...]  # per_edge / weight = 1 / node ratio
    edge_node: tuple[frozenset[int], ...]  # LCA vertex set per edge
    node_sigma: dict[frozenset[int], Fraction]
    node_edges: dict[frozenset[int], tuple[int, ...]]

    def unit_marginal_pairs(self) -> list[tuple[float, int]]:
        """(unit load as float, multiplicity c_e) per edge, for entropy sums."""
        return [
            (float(self.unit_per_edge[i]), self.graph.edges[i][2])
            for i in range(self.graph.m)
        ]


class _EulerLCA:
    """Constant-time LCA queries via Euler tour + sparse table of depths."""

    def __init__(self, root: HierarchyNode):
        euler: list[HierarchyNode] = []
        depth: list[int] = []
        first: dict[frozenset[int], int] = {}
        stack: list[tuple[HierarchyNode, int, int]] = [(root, 0, 0)]
        while stack:
            node, d, child_idx = stack.pop()
            if child_idx == 0:
                first.setdefault(node.vertex_set, len(euler))
            euler.append(node)
            depth.append(d)
            if child_idx < len(node.children):
                stack.append((node, d, child_idx + 1))
                stack.append((node.children[child_idx], d + 1, 0))
        self.euler = euler
        self.first = first
        size = len(euler)
        levels = max(1, size.bit_length())
        table = [list(range(size))]
        for j in range(1, levels):
            prev = table[-1]
            half = 1 << (j - 1)
            row = [
                prev[i]
                if depth[prev[i]] <= depth[prev[i + half]]
                else prev[i + half]
                for i in range(size - (1 << j) + 1)
            ]
            table.append(row)
        self.depth = depth
        self.table = table

    def query(self, a: frozenset[int], b: frozenset[int]) -> HierarchyNode:
        i, j = self.first[a], self.first[b]
        if i > j:
            i, j = j, i
        span = j - i + 1
        level = span.bit_length() - 1
        left = self.table[level][i]
        right = self.table[level][j - (1 << level) + 1]
        best = left if self.depth[left] <= self.depth[right] else right
        return self.euler[best]


def ideal_loads(graph: WeightedGraph, tree: HierarchyTree) -> IdealLoads:
    """Exact loads: each edge's weight over the ratio of its LCA node."""
    for v in range(graph.n):
        if frozenset({v}) not in tree.node_by_set:
            raise LoadsError(f"vertex {v} is not a leaf of the tree")
    lca = _EulerLCA(tree.root)
    assigned_weight: dict[frozenset[int], int] = {}
    assigned_edges: dict[frozenset[int], list[int]] = {}
    edge_node: list[frozenset[int]] = []
    for idx, (u, v, w) in enumerate(graph.edges):
        node = lca.query(frozenset({u}), frozenset({v}))
        key = node.vertex_set
        edge_node.append(key)
        assigned_weight[key] = assigned_weight.get(key, 0) + w
        assigned_edges.setdefault(key, []).append(idx)
    node_sigma: dict[frozenset[int], Fraction] = {}
    for node in tree.internal_nodes():
        key = node.vertex_set
        if key not in assigned_weight:
            raise LoadsError(
                f"internal node {sorted(key)} has no crossing edges; the tree "
                "cannot be a cut hierarchy of this graph"
            )
        node_sigma[key] = Fraction(assigned_weight[key], len(node.children) - 1)
    per_edge = tuple(
        Fraction(w) / node_sigma[edge_node[i]]
        for i, (_, _, w) in enumerate(graph.edges)
    )
    unit_per_edge = tuple(
        per_edge[i] / graph.edges[i][2] for i in range(graph.m)
    )
    return IdealLoads(
        graph=graph,
        tree=tree,
        per_edge=per_edge,
        unit_per_edge=unit_per_edge,
        edge_node=tuple(edge_node),
        node_sigma=node_sigma,
        node_edges={k: tuple(v) for k, v in assigned_edges.items()},
    )


def min_max_loads(loads: IdealLoads) -> tuple[Fraction, Fraction]:
    """Extreme unit-edge loads: (1/fractional arboricity, 1/strength)."""
    if not loads.unit_per_edge:
        raise LoadsError("graph has no edges")
    return min(loads.unit_per_edge), max(loads.unit_per_edge)


@dataclass(frozen=True)
class DualCertificate:
    """Log-ratio dual variables and the unit marginals they reconstruct.

    y is indexed by internal-node vertex sets: the root carries ln(root
    ratio) and every other internal node the log of its ratio over its
    parent's; ratio monotonicity along root paths makes all non-root entries
    nonnegative.  unit_marginals[i] = exp(-sum of y over nodes containing
    edge i) and equals the unit load up to float rounding.
    """

    y: dict[frozenset[int], float]
    unit_marginals: tuple[float, ...]


def entropy_certificate(graph: WeightedGraph, tree: HierarchyTree) -> DualCertificate:
    loads = ideal_loads(graph, tree)
    y: dict[frozenset[int], float] = {}
    prefix: dict[frozenset[int], float] = {}
    stack: list[tuple[HierarchyNode, float]] = [(tree.root, 0.0)]
    while stack:
        node, acc = stack.pop()
        if node.is_leaf:
            continue
        sigma = float(loads.node_sigma[node.vertex_set])
        y_node = math.log(sigma) - acc
        y[node.vertex_set] = y_node
        prefix[node.vertex_set] = acc + y_node
        for child in node.children:
            stack.append((child, acc + y_node))
    marginals = []
    for i in range(graph.m):
        key = loads.edge_node[i]
        x = math.exp(-prefix[key])
        expected = float(loads.unit_per_edge[i])
        if abs(x - expected) > RECONSTRUCTION_TOL:
            raise LoadsError(
                f"certificate reconstruction off by {abs(x - expected):.3e} "
                f"on edge {i}"
            )
        marginals.append(x)
    return DualCertificate(y=y, unit_marginals=tuple(marginals))


def entropy_value(
    marginals: Iterable[float], weights: Iterable[int] | None = None
) -> float:
    """Sum of x*ln(x) over unit edges (0 ln 0 := 0), optional multiplicities."""
    if weights is None:
        return sum(x * math.log(x) for x in marginals if x > 0)
    return sum(w * x * math.log(x) for x, w in zip(marginals, weights) if x > 0)
