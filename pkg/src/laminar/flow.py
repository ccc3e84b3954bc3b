"""Directed capacitated networks and exact integral max flow / min cut.

Capacities are nonnegative integers or the INF sentinel.  Inside the flow
engine INF arcs are replaced by 1 + (sum of all finite capacities), which
exceeds every finite cut; a cut whose value comes out above the finite total
is reported as infinite.

The engine is blocking-flow based (shortest augmenting phases) with optional
capacity scaling, and supports a `limit`: augmentation stops once the flow
value reaches it, which lets callers ask "is the min cut below x?" without
paying for an exact answer when it is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

INF = float("inf")


class FlowError(ValueError):
    """Invalid network construction or flow query."""


class DirectedNetwork:
    """Digraph with parallel arcs and integer-or-infinite capacities."""

    __slots__ = ("n", "tails", "heads", "caps", "_finite_total", "_engine")

    def __init__(self, n: int):
        if n < 0:
            raise FlowError("node count must be nonnegative")
        self.n = n
        self.tails: list[int] = []
        self.heads: list[int] = []
        self.caps: list[int | float] = []
        self._finite_total = 0
        self._engine: "_Engine | None" = None

    def add_arc(self, tail: int, head: int, cap: int | float) -> int:
        if not (0 <= tail < self.n and 0 <= head < self.n):
            raise FlowError("arc endpoint out of range")
        if cap != INF:
            if not isinstance(cap, int) or cap < 0:
                raise FlowError("capacity must be a nonnegative integer or INF")
            self._finite_total += cap
        self.tails.append(tail)
        self.heads.append(head)
        self.caps.append(cap)
        self._engine = None
        return len(self.caps) - 1

    @property
    def arc_count(self) -> int:
        return len(self.caps)

    def arcs(self) -> Iterable[tuple[int, int, int | float]]:
        return zip(self.tails, self.heads, self.caps)

    def finite_total(self) -> int:
        return self._finite_total

    def cut_value(self, source_side: Iterable[int]) -> int | float:
        """d+(S): total capacity of arcs leaving source_side."""
        s = frozenset(source_side)
        total = 0
        for u, v, c in zip(self.tails, self.heads, self.caps):
            if u in s and v not in s:
                if c == INF:
                    return INF
                total += c
        return total

    def extended(self, extra_arcs: Iterable[tuple[int, int, int | float]]) -> "DirectedNetwork":
        """Copy of this network with additional arcs appended."""
        out = DirectedNetwork(self.n)
        out.tails = list(self.tails)
        out.heads = list(self.heads)
        out.caps = list(self.caps)
        out._finite_total = self._finite_total
        for u, v, c in extra_arcs:
            out.add_arc(u, v, c)
        return out

    def engine(self) -> "_Engine":
        if self._engine is None:
            self._engine = _Engine(self)
        return self._engine

    def __repr__(self):
        return f"DirectedNetwork(n={self.n}, arcs={self.arc_count})"


@dataclass(frozen=True)
class FlowResult:
    """An s-t flow: total value plus the per-arc flow amounts."""

    value: int
    flows: tuple[int, ...]
    reached_limit: bool = False


@dataclass(frozen=True)
class STCut:
    """A directed cut given by its source side; value INF means no finite cut."""

    source_side: frozenset[int]
    value: int | float


class _Engine:
    """Reusable residual arrays for one network; arc 2i is forward, 2i+1 back."""

    __slots__ = ("n", "to", "base_cap", "adj", "big")

    def __init__(self, net: DirectedNetwork):
        big = net.finite_total() + 1
        to: list[int] = []
        base_cap: list[int] = []
        adj: list[list[int]] = [[] for _ in range(net.n)]
        for u, v, c in zip(net.tails, net.heads, net.caps):
            adj[u].append(len(to))
            to.append(v)
            base_cap.append(big if c == INF else c)
            adj[v].append(len(to))
            to.append(u)
            base_cap.append(0)
        self.n = net.n
        self.to = to
        self.base_cap = base_cap
        self.adj = adj
        self.big = big

    def run(
        self, s: int, t: int, limit: int | None, scaling: bool | None
    ) -> tuple[int, list[int], bool]:
        """Blocking-flow phases; returns (value, residual caps, reached_limit)."""
        n = self.n
        to = self.to
        adj = self.adj
        cap = self.base_cap.copy()
        maxcap = max(cap, default=0)
        if scaling is None:
            scaling = maxcap >= 1 << 16
        delta = 1 << (maxcap.bit_length() - 1) if (scaling and maxcap > 0) else 1

        value = 0
        if limit is not None and value >= limit:
            return value, cap, True
        level = [-1] * n
        it = [0] * n
        while True:
            # BFS level graph on arcs with residual >= delta.
            for i in range(n):
                level[i] = -1
            level[s] = 0
            queue = [s]
            qi = 0
            while qi < len(queue):
                v = queue[qi]
                qi += 1
                lv = level[v] + 1
                if level[t] >= 0 and lv > level[t]:
                    break  # deeper nodes cannot lie on a shortest path
                for a in adj[v]:
                    if cap[a] >= delta:
                        w = to[a]
                        if level[w] < 0:
                            level[w] = lv
                            queue.append(w)
            if level[t] < 0:
                if delta > 1:
                    delta >>= 1
                    continue
                break
            for i in range(n):
                it[i] = 0
            # Extract augmenting paths from the level graph.
            while True:
                path: list[int] = []
                v = s
                found = False
                while True:
                    if v == t:
                        found = True
                        break
                    advanced = False
                    itv = it[v]
                    adj_v = adj[v]
                    la = len(adj_v)
                    lv1 = level[v] + 1
                    while itv < la:
                        a = adj_v[itv]
                        if cap[a] >= delta and level[to[a]] == lv1:
                            advanced = True
                            break
                        itv += 1
                    it[v] = itv
                    if advanced:
                        path.append(a)
                        v = to[a]
                        continue
                    if not path:
                        break
                    level[v] = -1  # dead end within this phase
                    a = path.pop()
                    v = to[a ^ 1]
                if not found:
                    break
                bottleneck = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= bottleneck
                    cap[a ^ 1] += bottleneck
                value += bottleneck
                if limit is not None and value >= limit:
                    return value, cap, True
        return value, cap, False


def max_flow(
    net: DirectedNetwork,
    s: int,
    t: int,
    *,
    limit: int | None = None,
    scaling: bool | None = None,
) -> FlowResult:
    """Exact integral max flow by blocking flows (Dinic), optionally scaled.

    With `limit`, augmentation stops once the flow value reaches it and the
    result is marked reached_limit; the caller then knows the min cut is at
    least `limit`.  Capacity scaling is enabled automatically for large
    capacities (scaling=None) or forced on/off.
    """
    if s == t:
        raise FlowError("source and sink must differ")
    if not (0 <= s < net.n and 0 <= t < net.n):
        raise FlowError("source or sink out of range")
    value, cap, reached = net.engine().run(s, t, limit, scaling)
    flows = tuple(cap[2 * i + 1] for i in range(net.arc_count))
    return FlowResult(value=value, flows=flows, reached_limit=reached)


def validate_flow(net: DirectedNetwork, flow: FlowResult, s: int, t: int) -> None:
    """Check capacity bounds and conservation; raises FlowError on violation."""
    balance = [0] * net.n
    for i, (u, v, c) in enumerate(net.arcs()):
        f = flow.flows[i]
        if f < 0 or (c != INF and f > c):
            raise FlowError(f"arc {i} flow {f} violates capacity {c}")
        balance[u] -= f
        balance[v] += f
    for v in range(net.n):
        if v == s:
            if balance[v] != -flow.value:
                raise FlowError("source outflow does not match the flow value")
        elif v == t:
            if balance[v] != flow.value:
                raise FlowError("sink inflow does not match the flow value")
        elif balance[v] != 0:
            raise FlowError(f"node {v} violates flow conservation")


def _residual_adj(net: DirectedNetwork, flow: FlowResult):
    """Adjacency of arcs with positive residual capacity, as (node -> heads).

    Uses the engine's substituted capacity for INF arcs so that side
    extraction stays consistent even when the flow itself is "infinite".
    """
    big = net.finite_total() + 1
    fwd: list[list[int]] = [[] for _ in range(net.n)]
    for i, (u, v, c) in enumerate(zip(net.tails, net.heads, net.caps)):
        f = flow.flows[i]
        if (big if c == INF else c) - f > 0:
            fwd[u].append(v)
        if f > 0:
            fwd[v].append(u)
    return fwd


def _reach(adjacency: list[list[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def min_source_side(net: DirectedNetwork, flow: FlowResult, s: int) -> frozenset[int]:
    """Canonical minimal min-cut source side: residual reachability from s."""
    return frozenset(_reach(_residual_adj(net, flow), s))


def max_source_side(net: DirectedNetwork, flow: FlowResult, t: int) -> frozenset[int]:
    """Maximal min-cut source side: complement of what reaches t residually."""
    big = net.finite_total() + 1
    rev: list[list[int]] = [[] for _ in range(net.n)]
    for i, (u, v, c) in enumerate(zip(net.tails, net.heads, net.caps)):
        f = flow.flows[i]
        if (big if c == INF else c) - f > 0:
            rev[v].append(u)
        if f > 0:
            rev[u].append(v)
    to_sink = _reach(rev, t)
    return frozenset(range(net.n)) - to_sink


def _as_cut_value(net: DirectedNetwork, value: int) -> int | float:
    return INF if value > net.finite_total() else value


def min_st_cut(
    net: DirectedNetwork, s: int, t: int, *, limit: int | None = None
) -> STCut | None:
    """Minimum s-t cut with the canonical minimal source side.

    Returns None when `limit` is given and the min cut value is >= limit.
    """
    flow = max_flow(net, s, t, limit=limit)
    if flow.reached_limit:
        return None
    side = min_source_side(net, flow, s)
    return STCut(source_side=side, value=_as_cut_value(net, flow.value))


def residual(net: DirectedNetwork, flow: FlowResult) -> DirectedNetwork:
    """Residual network of a flow: per arc, forward c-f and backward f."""
    out = DirectedNetwork(net.n)
    for i, (u, v, c) in enumerate(zip(net.tails, net.heads, net.caps)):
        f = flow.flows[i]
        out.add_arc(u, v, INF if c == INF else c - f)
        out.add_arc(v, u, f)
    return out


def t_mincut_exhaustive(
    net: DirectedNetwork,
    t: int,
    *,
    limit: int | None = None,
    first_hit: bool = False,
    sources: Iterable[int] | None = None,
) -> STCut | None:
    """Minimum over all sources s != t of the min s-t cut.

    Covers every t-cut (source side excluding t) exactly.  With `limit`,
    returns None unless some t-cut is strictly below it; first_hit
    additionally returns the first such cut found instead of the minimum,
    which is all a threshold comparison needs.  `sources`, when given, must
    be guaranteed by the caller to intersect every t-cut below the limit.
    An all-infinite answer is reported with value INF.
    """
    if net.n < 2:
        raise FlowError("t-mincut needs at least 2 nodes")
    if not 0 <= t < net.n:
        raise FlowError("t out of range")
    if sources is None:
        sources = range(net.n)
    # Scan on a copy with a zero-capacity pin arc per node.  After a source
    # is processed, every side containing it is accounted for (its minimum is
    # at least the running bound), so the source is retired into the sink
    # side by raising its pin to the engine's infinite substitute; later
    # flows then need not consider sides containing it, and terminate faster.
    scan = net.extended((v, t, 0) for v in range(net.n) if v != t)
    pin_arc = {}
    next_arc = 2 * net.arc_count
    for v in range(net.n):
        if v != t:
            pin_arc[v] = next_arc
            next_arc += 2
    engine = scan.engine()
    best: STCut | None = None
    best_raw: int | None = None
    bound = limit
    for s in sources:
        if s == t:
            continue
        flow = max_flow(scan, s, t, limit=bound)
        if not flow.reached_limit:
            if best_raw is None or flow.value < best_raw:
                best_raw = flow.value
                best = STCut(
                    source_side=min_source_side(scan, flow, s),
                    value=_as_cut_value(net, flow.value),
                )
                if first_hit and limit is not None:
                    return best
                bound = flow.value if limit is None else min(limit, flow.value)
        engine.base_cap[pin_arc[s]] = engine.big
    return best
