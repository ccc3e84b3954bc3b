"""Randomized small-cut machinery for directed networks.

Pipeline: round capacities to multiples of mu and add a cheap arc from every
node to the root t (so the rounded network has a small t-mincut), pack
t-arborescences fractionally by multiplicative weights, sample a few trees
from the packing, and take the best cut that crosses a sampled tree on
exactly one tree arc.  Every candidate is evaluated against the original
capacities; a miss is a legal outcome and the caller retries or falls back
to the exhaustive scan.

Randomness is explicit everywhere: operations take a `random.Random` stream
or a 64-bit seed, and substreams are derived with getrandbits(64).
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .flow import INF, DirectedNetwork, STCut, min_st_cut, t_mincut_exhaustive

#: default multiplier in the packing iteration count C * k * log2(n)
PACKING_CONSTANT = 64
#: granularity factor for capacity rounding; 1/(2*c_mu) is the union-bound
#: exponent, and 1/8 is the largest power of two keeping it >= 3
C_MU = Fraction(1, 8)


class DircutError(ValueError):
    """Invalid input to the directed-cut pipeline."""


@dataclass(frozen=True)
class PipelineConfig:
    """Tunables for the randomized small-cut pipeline.

    epsilon and c_mu default to the analysis constants (0.1 and 1/8).
    packing_constant here is the desk-scale budget multiplier used when
    packing inside the pipeline (the standalone packing default is
    PACKING_CONSTANT, which additionally honors the worst-case iteration
    bound); sample_constant scales the number of trees drawn per call.
    """

    epsilon: Fraction = Fraction(1, 10)
    c_mu: Fraction = C_MU
    packing_constant: int = 8
    sample_constant: int = 8


def _log2_ceil(n: int) -> int:
    return max(1, (max(n, 2) - 1).bit_length())


@dataclass(frozen=True)
class SparsifierParams:
    """Rounding parameters: tau and eps*tau/(2k) are integer multiples of mu."""

    tau: Fraction
    k: int
    epsilon: Fraction
    mu: Fraction
    rng_seed: int

    def __post_init__(self):
        if self.tau <= 0:
            raise DircutError("tau must be positive")
        if self.k < 1:
            raise DircutError("k must be at least 1")
        if not 0 < self.epsilon < 1:
            raise DircutError("epsilon must lie in (0, 1)")
        if self.mu <= 0:
            raise DircutError("mu must be positive")
        if (self.tau / self.mu).denominator != 1:
            raise DircutError("tau must be an integer multiple of mu")
        if (self.epsilon * self.tau / (2 * self.k) / self.mu).denominator != 1:
            raise DircutError("eps*tau/(2k) must be an integer multiple of mu")

    @property
    def backbone_cap(self) -> Fraction:
        """Capacity eps*tau/(2k) of the added per-node arcs into t."""
        return self.epsilon * self.tau / (2 * self.k)

    @staticmethod
    def derive(
        tau: Fraction | int,
        k: int,
        epsilon: Fraction,
        n: int,
        rng_seed: int,
        *,
        c_mu: Fraction = C_MU,
    ) -> "SparsifierParams":
        """Pick mu ~ c_mu*eps^2*tau/(k log n), rounded down so that tau and
        eps*tau/(2k) are exact integer multiples of it."""
        tau = Fraction(tau)
        epsilon = Fraction(epsilon)
        if tau <= 0 or k < 1 or not 0 < epsilon < 1:
            raise DircutError("invalid sparsifier parameters")
        level = _log2_ceil(n)
        mu_target = c_mu * epsilon * epsilon * tau / (k * level)
        backbone = epsilon * tau / (2 * k)
        j0 = max(1, math.ceil(backbone / mu_target))
        p, q = epsilon.numerator, epsilon.denominator
        step = p // gcd(p, 2 * k * q)  # makes tau/mu = 2*k*j*q/p integral
        j = ((j0 + step - 1) // step) * step
        return SparsifierParams(
            tau=tau, k=k, epsilon=epsilon, mu=backbone / j, rng_seed=rng_seed
        )


def sparsify(net: DirectedNetwork, t: int, params: SparsifierParams) -> DirectedNetwork:
    """Rounded network with a cheap per-node backbone into t, scaled by 1/mu.

    Step 1 rounds each capacity to an adjacent multiple of mu, preserving the
    expectation; step 2 adds an arc v->t of capacity eps*tau/(2k) for every
    v != t; step 3 divides everything by mu, yielding integers.  The RNG is
    seeded from params.rng_seed and consumes one randrange(denominator) draw
    per arc whose capacity is not already a multiple of mu, in arc order.
    """
    if not 0 <= t < net.n:
        raise DircutError("t out of range")
    rng = random.Random(params.rng_seed)
    mu = params.mu
    out = DirectedNetwork(net.n)
    for u, v, c in net.arcs():
        if c == INF:
            raise DircutError("sparsifier requires finite integer capacities")
        ratio = Fraction(c) / mu
        base = ratio.numerator // ratio.denominator
        frac = ratio - base
        if frac == 0:
            rounded = base
        else:
            rounded = base + (1 if rng.randrange(frac.denominator) < frac.numerator else 0)
        out.add_arc(u, v, rounded)
    backbone = int(params.backbone_cap / mu)
    for v in range(net.n):
        if v != t:
            out.add_arc(v, t, backbone)
    return out


@dataclass(frozen=True)
class Arborescence:
    """Out-tree toward t: every other node has one outgoing arc on a path to t.

    parent[v] is the unique out-neighbor (parent[t] = -1); arc_ids[v] is the
    network arc realizing it (-1 for t), so parallel arcs stay distinguishable.
    """

    t: int
    parent: tuple[int, ...]
    arc_ids: tuple[int, ...]

    def __post_init__(self):
        n = len(self.parent)
        if not 0 <= self.t < n:
            raise DircutError("root out of range")
        if self.parent[self.t] != -1 or self.arc_ids[self.t] != -1:
            raise DircutError("root must have no parent")
        for v in range(n):
            if v == self.t:
                continue
            hops = 0
            w = v
            while w != self.t:
                w = self.parent[w]
                hops += 1
                if w < 0 or hops > n:
                    raise DircutError(f"node {v} does not reach the root")

    @property
    def n(self) -> int:
        return len(self.parent)

    def arcs(self) -> list[tuple[int, int]]:
        return [(v, self.parent[v]) for v in range(self.n) if v != self.t]


@dataclass(frozen=True)
class ArborescencePacking:
    """Nonnegative weights on arborescences; per-arc usage stays within capacity."""

    items: tuple[tuple[Arborescence, Fraction], ...]
    value: Fraction

    def arc_usage(self) -> dict[int, Fraction]:
        usage: dict[int, Fraction] = {}
        for tree, weight in self.items:
            for a in tree.arc_ids:
                if a >= 0:
                    usage[a] = usage.get(a, Fraction(0)) + weight
        return usage


def min_cost_arborescence(
    net: DirectedNetwork,
    t: int,
    costs: Sequence[float | Fraction],
    *,
    usable: Iterable[int] | None = None,
) -> Arborescence:
    """Exact minimum-cost t-arborescence (cycle-contraction algorithm).

    costs are indexed by arc id; `usable` restricts the candidate arcs.
    Raises when some node cannot reach t through candidate arcs.
    """
    if not 0 <= t < net.n:
        raise DircutError("t out of range")
    arc_ids = range(net.arc_count) if usable is None else usable
    # Work on reversed arcs: choosing one in-arc per node in the reversal,
    # rooted at t, is choosing one out-arc per node toward t here.
    arcs = [
        (net.heads[i], net.tails[i], costs[i], i)
        for i in arc_ids
        if net.tails[i] != net.heads[i] and net.tails[i] != t
    ]
    chosen = _min_in_arborescence(frozenset(range(net.n)), arcs, t)
    parent = [-1] * net.n
    arc_of = [-1] * net.n
    for i in chosen:
        parent[net.tails[i]] = net.heads[i]
        arc_of[net.tails[i]] = i
    return Arborescence(t=t, parent=tuple(parent), arc_ids=tuple(arc_of))


def _min_in_arborescence(nodes: frozenset[int], arcs, root: int) -> list[int]:
    """Edmonds on (tail, head, cost, token) arcs; one in-arc per non-root node.

    Returns the original tokens of the chosen arcs.
    """
    best: dict[int, tuple] = {}
    for a in arcs:
        u, v, c, _tok = a
        if v == root or u == v:
            continue
        cur = best.get(v)
        if cur is None or c < cur[2]:
            best[v] = a
    for v in nodes:
        if v != root and v not in best:
            raise DircutError("no t-arborescence exists: a node cannot reach t")
    # Detect a cycle among the chosen arcs.
    color = {v: 0 for v in nodes}
    cycle: list[int] | None = None
    for start in nodes:
        if color[start] != 0:
            continue
        path = []
        v = start
        while v != root and color[v] == 0:
            color[v] = 1
            path.append(v)
            v = best[v][0]
        if v != root and color[v] == 1:  # fresh cycle
            cycle = path[path.index(v):]
            break
        for w in path:
            color[w] = 2
    if cycle is None:
        return [best[v][3] for v in nodes if v != root]
    # Contract the cycle into a fresh node and recurse with reduced costs.
    cyc = set(cycle)
    super_node = max(nodes) + 1
    mapped = []
    for u, v, c, tok in arcs:
        mu = super_node if u in cyc else u
        mv = super_node if v in cyc else v
        if mu == mv:
            continue
        if mv == super_node:
            mapped.append((mu, mv, c - best[v][2], (tok, v)))
        else:
            mapped.append((mu, mv, c, (tok, None)))
    sub_nodes = (nodes - cyc) | {super_node}
    sub_chosen = _min_in_arborescence(frozenset(sub_nodes), mapped, root)
    result = []
    entry_node = None
    for tok, enters in sub_chosen:
        result.append(tok)
        if enters is not None:
            entry_node = enters
    assert entry_node is not None, "contracted node must receive an in-arc"
    for v in cycle:
        if v != entry_node:
            result.append(best[v][3])
    return result


def _young_iterations(epsilon: float, arcs: int, k: int) -> int:
    """Iteration count guaranteeing a (1+eps)-approximate packing ratio."""
    delta = (1 + epsilon) * math.log1p(epsilon) - epsilon
    return math.ceil((1 + epsilon) * k * math.log(max(arcs, 2)) / delta)


def pack_arborescences(
    net: DirectedNetwork,
    t: int,
    k: int,
    epsilon: float | Fraction,
    *,
    iterations: int | None = None,
    include_zero_capacity: bool = False,
) -> ArborescencePacking:
    """Fractional t-arborescence packing by multiplicative weights.

    Each round picks the arborescence minimizing sum of y_j / w_j and bumps
    the used arcs' y by (1 + eps*f_j/omega); the averaged choice, rescaled to
    per-arc feasibility, is the packing.  With the default iteration budget
    (C*k*log2 n, raised to the worst-case bound when that is larger) the
    value is at least (1-eps) times the t-mincut when that mincut is <= k.

    Zero-capacity arcs are dropped from the candidate set by default; with
    include_zero_capacity they stay as infinitely-expensive candidates, which
    yields the same packing whenever they are avoidable.
    """
    if net.n < 2:
        raise DircutError("packing needs at least 2 nodes")
    if k < 1:
        raise DircutError("k must be at least 1")
    eps = float(epsilon)
    if not 0 < eps < 1:
        raise DircutError("epsilon must lie in (0, 1)")
    caps = net.caps
    if any(c == INF for c in caps):
        raise DircutError("packing requires finite integer capacities")
    usable = [i for i in range(net.arc_count) if caps[i] >= 1]
    zero_arcs = []
    if include_zero_capacity:
        zero_arcs = [i for i in range(net.arc_count) if caps[i] == 0]
    if iterations is None:
        level = _log2_ceil(net.n)
        iterations = max(
            math.ceil(PACKING_CONSTANT * k * level),
            _young_iterations(eps, len(usable), k),
        )
    wmin = min((caps[i] for i in usable), default=1)
    omega = 1.0 / wmin
    y = [1.0] * net.arc_count
    counts: Counter[Arborescence] = Counter()
    candidate_ids = usable + zero_arcs
    costs: list[float] = [0.0] * net.arc_count
    for _ in range(iterations):
        for i in usable:
            costs[i] = y[i] / caps[i]
        for i in zero_arcs:
            costs[i] = math.inf
        tree = min_cost_arborescence(net, t, costs, usable=candidate_ids)
        counts[tree] += 1
        top = 1.0
        for a in tree.arc_ids:
            if a >= 0:
                y[a] *= 1.0 + eps * (1.0 / caps[a]) / omega
                if y[a] > top:
                    top = y[a]
        if top > 1e250:  # argmin is scale-invariant; renormalize before overflow
            for i in usable:
                y[i] /= top
    arc_counts: Counter[int] = Counter()
    for tree, cnt in counts.items():
        for a in tree.arc_ids:
            if a >= 0:
                arc_counts[a] += cnt
    if any(caps[a] == 0 for a in arc_counts):
        raise DircutError("packing was forced through a zero-capacity arc")
    gamma_bar = max(
        (Fraction(cnt, iterations * caps[a]) for a, cnt in arc_counts.items()),
        default=Fraction(0),
    )
    if gamma_bar == 0:
        raise DircutError("degenerate packing: no arcs were ever used")
    items = tuple(
        (tree, Fraction(cnt, iterations) / gamma_bar) for tree, cnt in counts.items()
    )
    return ArborescencePacking(items=items, value=1 / gamma_bar)


def one_respecting_mincut(net: DirectedNetwork, tree: Arborescence, t: int) -> STCut:
    """Minimum t-cut whose boundary contains exactly one arborescence arc.

    For each tree arc (u, parent(u)): adding infinite arcs v->parent(v) for
    every other node forces min u-t cut source sides to be closed under tree
    parents except at u, which makes them exactly the cuts 1-respecting the
    tree at that arc.  Minimizing over the n-1 designated arcs is exact.
    """
    if tree.n != net.n or tree.t != t:
        raise DircutError("arborescence does not match the network")
    best: STCut | None = None
    for u in range(net.n):
        if u == t:
            continue
        extra = [
            (v, tree.parent[v], INF)
            for v in range(net.n)
            if v != t and v != u
        ]
        cut = min_st_cut(net.extended(extra), u, t)
        assert cut is not None
        if best is None or cut.value < best.value:
            best = cut
    assert best is not None, "network has no non-root node"
    return best


def _strict_limit(threshold: Fraction | int) -> int:
    """Smallest integer limit L with: integer d < threshold  iff  d < L."""
    threshold = Fraction(threshold)
    return int(threshold) if threshold.denominator == 1 else math.floor(threshold) + 1


def find_small_cut(
    net: DirectedNetwork,
    t: int,
    threshold: Fraction | int,
    k: int,
    rng: random.Random,
    *,
    config: PipelineConfig | None = None,
    mode: str = "randomized",
) -> STCut | None:
    """Look for a t-cut of value strictly below threshold.

    Randomized mode runs the sparsify/pack/sample pipeline and evaluates
    every candidate against the original network, returning the first hit;
    an empty result is legal (the caller retries or falls back).  Exact mode
    delegates to the exhaustive scan and is never wrong.
    """
    cfg = config or PipelineConfig()
    if mode == "exact":
        return t_mincut_exhaustive(net, t, limit=_strict_limit(threshold))
    if mode != "randomized":
        raise ValueError(f"unknown mode {mode!r}")
    if net.n < 2:
        raise DircutError("need at least 2 nodes")
    params = SparsifierParams.derive(
        Fraction(threshold),
        k,
        cfg.epsilon,
        net.n,
        rng.getrandbits(64),
        c_mu=cfg.c_mu,
    )
    sparse = sparsify(net, t, params)
    level = _log2_ceil(net.n)
    packing = pack_arborescences(
        sparse,
        t,
        k,
        cfg.epsilon,
        iterations=math.ceil(cfg.packing_constant * k * level),
    )
    trees = [tree for tree, _ in packing.items]
    weights = [float(w) for _, w in packing.items]
    samples = math.ceil(cfg.sample_constant * level)
    drawn = rng.choices(trees, weights=weights, k=samples)
    seen: set[Arborescence] = set()
    for tree in drawn:
        if tree in seen:
            continue
        seen.add(tree)
        cut = one_respecting_mincut(net, tree, t)
        if cut.value < threshold:
            return cut
    return None


def size_bounded_t_mincut(
    net: DirectedNetwork,
    t: int,
    k: int,
    rng: random.Random | None = None,
    *,
    config: PipelineConfig | None = None,
    mode: str = "exact",
) -> STCut:
    """Minimum t-cut; exact by default, with a randomized pipeline behind a flag.

    The randomized path binary-searches the cut value, calling the small-cut
    finder at each step; it is correct w.h.p. when some t-mincut source side
    has at most k nodes, and is intended for exercising the pipeline
    end-to-end rather than as the correctness path.
    """
    if mode == "exact":
        cut = t_mincut_exhaustive(net, t)
        assert cut is not None
        return cut
    if mode != "randomized":
        raise ValueError(f"unknown mode {mode!r}")
    if rng is None:
        raise DircutError("randomized mode needs an RNG stream")
    if any(c == INF for c in net.caps):
        raise DircutError("randomized mode requires finite capacities")
    everything = frozenset(v for v in range(net.n) if v != t)
    best = STCut(source_side=everything, value=net.cut_value(everything))
    lo = 0
    hi = int(best.value) + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        cut = find_small_cut(net, t, mid, k, rng, config=config)
        if cut is not None and cut.value < mid:
            if cut.value < best.value:
                best = cut
            hi = int(cut.value) + 1
        else:
            lo = mid
    return best
