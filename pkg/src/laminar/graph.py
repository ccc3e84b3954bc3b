"""Weighted undirected multigraphs with exact rational densities and cut ratios.

All quantities that could be fractional (skew-density, cut ratios, thresholds,
loads) are `fractions.Fraction`; nothing in this package rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

Edge = tuple[int, int, int]  # (u, v, weight)


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


class EdgeListError(ValueError):
    """Malformed edge-list input; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected multigraph with positive integer edge weights.

    Vertices are dense ids 0..n-1.  Parallel edges are kept distinct (they are
    never merged, so a weighted edge can also be viewed as parallel unit
    edges).  Self-loops are rejected.
    """

    n: int
    edges: tuple[Edge, ...]
    _adj: tuple[tuple[tuple[int, int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for idx, (u, v, w) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {idx} endpoint out of range")
            if u == v:
                raise GraphError(f"edge {idx} is a self-loop")
            if not isinstance(w, int) or w < 1:
                raise GraphError(f"edge {idx} weight must be a positive integer")
            adj[u].append((v, w, idx))
            adj[v].append((u, w, idx))
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "WeightedGraph":
        return WeightedGraph(n, tuple((e[0], e[1], e[2]) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=0)

    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    def adjacency(self, v: int) -> tuple[tuple[int, int, int], ...]:
        """Neighbors of v as (other endpoint, weight, edge index)."""
        return self._adj[v]

    def weight_inside(self, s: Iterable[int]) -> int:
        """Total weight of edges with both endpoints in s."""
        inside = set(s)
        return sum(w for u, v, w in self.edges if u in inside and v in inside)

    def boundary_weight(self, s: Iterable[int]) -> int:
        """Total weight of edges with exactly one endpoint in s."""
        inside = set(s)
        return sum(w for u, v, w in self.edges if (u in inside) != (v in inside))

    def merged_edges(self) -> dict[tuple[int, int], int]:
        """Parallel-merged view: (min(u,v), max(u,v)) -> summed weight."""
        merged: dict[tuple[int, int], int] = {}
        for u, v, w in self.edges:
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + w
        return merged

    def is_connected(self) -> bool:
        return self.n <= 1 or len(connected_components(self)) == 1


@dataclass(frozen=True)
class ContractionMap:
    """Vertex correspondence produced by contracting a set into one node.

    forward maps every original vertex to its contracted-graph vertex;
    expansion maps each contracted-graph vertex back to the set of original
    vertices it represents.
    """

    forward: tuple[int, ...]
    expansion: tuple[frozenset[int], ...]

    def __post_init__(self):
        for new_id, originals in enumerate(self.expansion):
            for v in originals:
                if self.forward[v] != new_id:
                    raise GraphError("inconsistent contraction map")


class MultiwayCut:
    """A partition of V into >= 2 sides, with its boundary and cut ratio."""

    __slots__ = ("sides", "boundary", "ratio", "boundary_weight")

    def __init__(self, graph: WeightedGraph, sides: Iterable[Iterable[int]]):
        side_sets = tuple(frozenset(s) for s in sides)
        if len(side_sets) < 2:
            raise GraphError("a multiway cut needs at least 2 sides")
        seen: set[int] = set()
        for s in side_sets:
            if not s:
                raise GraphError("empty side in multiway cut")
            if seen & s:
                raise GraphError("sides of a multiway cut must be disjoint")
            seen |= s
        if seen != set(range(graph.n)):
            raise GraphError("sides must partition the vertex set")
        side_of = {}
        for i, s in enumerate(side_sets):
            for v in s:
                side_of[v] = i
        boundary = frozenset(
            idx for idx, (u, v, _) in enumerate(graph.edges) if side_of[u] != side_of[v]
        )
        weight = sum(graph.edges[i][2] for i in boundary)
        self.sides = side_sets
        self.boundary = boundary
        self.boundary_weight = weight
        self.ratio = Fraction(weight, len(side_sets) - 1)

    def __eq__(self, other):
        return (
            isinstance(other, MultiwayCut)
            and set(self.sides) == set(other.sides)
        )

    def __hash__(self):
        return hash(frozenset(self.sides))

    def __repr__(self):
        sides = sorted(tuple(sorted(s)) for s in self.sides)
        return f"MultiwayCut(sides={sides}, ratio={self.ratio})"


def skew_density(graph: WeightedGraph, s: Iterable[int]) -> Fraction:
    """Weight of edges inside s divided by |s|-1; zero when |s| <= 1."""
    inside = frozenset(s)
    if not inside <= set(range(graph.n)):
        raise GraphError("set is not a subset of the vertices")
    if len(inside) <= 1:
        return Fraction(0)
    return Fraction(graph.weight_inside(inside), len(inside) - 1)


def cut_ratio(graph: WeightedGraph, cut: MultiwayCut) -> Fraction:
    return cut.ratio


def contract(graph: WeightedGraph, s: Iterable[int]) -> tuple[WeightedGraph, ContractionMap]:
    """Contract vertex set s into a single node.

    Edges inside s are deleted, edges leaving s are re-attached to the new
    node, and parallel edges are kept distinct so all cut values are
    preserved exactly.  The new node takes the slot of min(s); the remaining
    vertices keep their relative order.
    """
    inside = frozenset(s)
    if not inside:
        raise GraphError("cannot contract the empty set")
    if not inside <= set(range(graph.n)):
        raise GraphError("set is not a subset of the vertices")
    rep = min(inside)
    forward: list[int] = []
    next_id = 0
    for v in range(graph.n):
        if v in inside and v != rep:
            forward.append(-1)  # patched below once rep's id is known
        else:
            forward.append(next_id)
            next_id += 1
    rep_id = forward[rep]
    for v in inside:
        forward[v] = rep_id
    expansion: list[set[int]] = [set() for _ in range(next_id)]
    for v in range(graph.n):
        expansion[forward[v]].add(v)
    new_edges = [
        (forward[u], forward[v], w)
        for u, v, w in graph.edges
        if not (u in inside and v in inside)
    ]
    contracted = WeightedGraph(next_id, tuple(new_edges))
    cmap = ContractionMap(tuple(forward), tuple(frozenset(e) for e in expansion))
    return contracted, cmap


def induced_subgraph(graph: WeightedGraph, s: Iterable[int]) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Induced subgraph on s, plus the map from new ids back to originals."""
    inside = frozenset(s)
    if not inside <= set(range(graph.n)):
        raise GraphError("set is not a subset of the vertices")
    sub_to_orig = tuple(sorted(inside))
    orig_to_sub = {v: i for i, v in enumerate(sub_to_orig)}
    new_edges = [
        (orig_to_sub[u], orig_to_sub[v], w)
        for u, v, w in graph.edges
        if u in inside and v in inside
    ]
    return WeightedGraph(len(sub_to_orig), tuple(new_edges)), sub_to_orig


def connected_components(
    graph: WeightedGraph, edge_subset: Iterable[int] | None = None
) -> list[frozenset[int]]:
    """Partition of V by connectivity in (V, F); F defaults to all edges."""
    if edge_subset is None:
        allowed = range(graph.m)
    else:
        allowed = sorted(set(edge_subset))
    neighbors: list[list[int]] = [[] for _ in range(graph.n)]
    for idx in allowed:
        u, v, _ = graph.edges[idx]
        neighbors[u].append(v)
        neighbors[v].append(u)
    seen = [False] * graph.n
    components: list[frozenset[int]] = []
    for start in range(graph.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(frozenset(comp))
    return components


def rank(graph: WeightedGraph, edge_subset: Iterable[int] | None = None) -> int:
    """Graphic-matroid rank of an edge subset: |V| minus component count."""
    return graph.n - len(connected_components(graph, edge_subset))


def parse_edge_list(text: str) -> WeightedGraph:
    """Parse the edge-list format: header `n m`, then m lines `u v w`.

    Vertices are 0-indexed, weights are positive integers, and lines starting
    with `#` are ignored.  Raises EdgeListError with the offending 1-based
    line number.
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListError(lineno, "expected header `n m`")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError(lineno, "header values must be integers") from None
            if n < 0 or m < 0:
                raise EdgeListError(lineno, "header values must be nonnegative")
            header = (n, m)
            continue
        if len(parts) != 3:
            raise EdgeListError(lineno, "expected edge line `u v w`")
        try:
            u, v, w = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise EdgeListError(lineno, "edge values must be integers") from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise EdgeListError(lineno, "self-loops are not allowed")
        if w < 1:
            raise EdgeListError(lineno, "weight must be a positive integer")
        edges.append((u, v, w))
    if header is None:
        raise EdgeListError(1, "missing header `n m`")
    if len(edges) != header[1]:
        raise EdgeListError(1, f"header declares {header[1]} edges, found {len(edges)}")
    return WeightedGraph(header[0], tuple(edges))


def format_edge_list(graph: WeightedGraph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v} {w}" for u, v, w in graph.edges)
    return "\n".join(lines) + "\n"
