"""Finding the maximum skew-densest set and verifying dense cores.

A probe at threshold tau succeeds exactly when some vertex set is
skew-denser than tau; binary-searching tau to within n^-3 brackets the
maximum density tightly enough that the t-mincut of the shortcut network at
the bracket's left end is the maximum skew-densest set.  All bracket
arithmetic is exact rational: the correctness window is narrower than the
minimum gap between distinct densities, so floats would break it.

A set S is a dense core when no subset is strictly denser and every proper
superset is strictly sparser.  Subsets are checked on the induced subgraph's
networks at threshold rho(S); supersets on the contracted graph's rooted
network, where S is a dense core iff the trivial source side is the unique
maximal min cut.  (Checking the flow value alone cannot work: the trivial
side always achieves exactly scale*(c(E[V/S]) + rho(S)), so a superset tying
rho(S) leaves the value unchanged and only shows up in the argmax.)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .dircut import PipelineConfig, find_small_cut, size_bounded_t_mincut
from .flow import max_flow, t_mincut_exhaustive
from .goldberg import build_goldberg, build_modified, min_cut_vertex_side
from .graph import GraphError, WeightedGraph, contract, induced_subgraph, skew_density


@dataclass(frozen=True)
class FindStarResult:
    """Outcome of the density binary search.

    Every probe recorded with True succeeded and drove tau_low up; the final
    bracket is narrower than n^-3, and candidate is the t-mincut of the
    shortcut network at tau_low.
    """

    candidate: frozenset[int]
    tau_low: Fraction
    tau_high: Fraction
    probes: tuple[tuple[Fraction, bool], ...]


def probe(
    graph: WeightedGraph,
    tau: Fraction,
    k: int,
    *,
    mode: str = "exact",
    rng: random.Random | None = None,
    config: PipelineConfig | None = None,
) -> tuple[bool, frozenset[int] | None]:
    """Is some vertex set skew-denser than tau?

    Succeeds when (a) the density network's s-t max flow falls short of
    scale*c(E), or (b) the shortcut network has a t-cut below scale*tau.  In
    exact mode (b) is decided by the exhaustive scan and the answer is
    exactly [tau < max density]; in randomized mode (b) uses the sampling
    pipeline and can only err toward failure, which the callers absorb.
    Returns a witness set alongside success when one is available.
    """
    if graph.n == 0 or not graph.is_connected():
        raise GraphError("probe needs a connected, nonempty graph")
    tau = Fraction(tau)
    if tau <= 0:
        raise GraphError("tau must be positive")
    h = build_goldberg(graph, tau)
    target = h.saturation_target()
    flow = max_flow(h.network, h.s, h.t, limit=target)
    if flow.value < target:
        return True, min_cut_vertex_side(h, flow)
    shortcut = build_modified(h, flow)
    threshold = shortcut.tau.numerator  # scale * tau
    if mode == "exact":
        from .arboricity import dense_side_sources

        cut = t_mincut_exhaustive(
            shortcut.network,
            shortcut.t,
            limit=threshold,
            first_hit=True,
            sources=dense_side_sources(graph, tau),
        )
    elif mode == "randomized":
        if rng is None:
            raise GraphError("randomized mode needs an RNG stream")
        cut = find_small_cut(
            shortcut.network, shortcut.t, threshold, k, rng, config=config
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if cut is not None and cut.value < threshold:
        return True, frozenset(cut.source_side)
    return False, None


def find_star_full(
    graph: WeightedGraph,
    k: int,
    *,
    mode: str = "exact",
    rng: random.Random | None = None,
    config: PipelineConfig | None = None,
) -> FindStarResult:
    """Binary search for the maximum skew-density, then extract its witness.

    With k at least the size of the maximum skew-densest set, the candidate
    equals that set (always in exact mode, w.h.p. in randomized mode).
    """
    if graph.n == 0 or not graph.is_connected():
        raise GraphError("find-star needs a connected, nonempty graph")
    if k < 1:
        raise GraphError("k must be at least 1")
    if graph.n == 1:
        return FindStarResult(frozenset({0}), Fraction(0), Fraction(0), ())
    if rng is None:
        rng = random.Random(0)
    tau_low = Fraction(0)
    tau_high = Fraction(graph.total_weight())
    width_limit = Fraction(1, graph.n**3)
    probes: list[tuple[Fraction, bool]] = []
    while tau_high - tau_low >= width_limit:
        tau = (tau_low + tau_high) / 2
        ok, _ = probe(graph, tau, k, mode=mode, rng=rng, config=config)
        probes.append((tau, ok))
        if ok:
            tau_low = tau
        else:
            tau_high = tau
    if tau_low == 0:
        # Only reachable when randomized probes failed throughout; an empty
        # candidate is rejected by the caller's size check.
        return FindStarResult(frozenset(), tau_low, tau_high, tuple(probes))
    h = build_goldberg(graph, tau_low)
    target = h.saturation_target()
    flow = max_flow(h.network, h.s, h.t, limit=target)
    if flow.value < target:
        # Mislabeled bracket (randomized mode): the density network's own min
        # cut still carries a denser-than-tau_low witness.
        candidate = min_cut_vertex_side(h, flow)
    else:
        shortcut = build_modified(h, flow)
        cut = size_bounded_t_mincut(
            shortcut.network,
            shortcut.t,
            k,
            rng=rng,
            config=config,
            mode=mode if mode == "randomized" else "exact",
        )
        candidate = frozenset(cut.source_side)
    return FindStarResult(candidate, tau_low, tau_high, tuple(probes))


def find_star(
    graph: WeightedGraph,
    k: int,
    *,
    mode: str = "exact",
    rng: random.Random | None = None,
    config: PipelineConfig | None = None,
) -> frozenset[int]:
    return find_star_full(graph, k, mode=mode, rng=rng, config=config).candidate


def verify_core_explain(
    graph: WeightedGraph, k: int, candidate
) -> tuple[bool, str | None]:
    """Dense-core check returning (verdict, failed condition or None)."""
    s_set = frozenset(candidate)
    if not s_set:
        raise GraphError("the candidate set is empty")
    if not s_set <= set(range(graph.n)):
        raise GraphError("the candidate set is not a subset of the vertices")
    if len(s_set) > k:
        return False, "set exceeds the size bound"
    rho = skew_density(graph, s_set)
    if rho == 0:
        # No internal weight: subsets are trivially no denser, and any proper
        # superset has density >= 0 = rho(S), violating strictness.
        if s_set == frozenset(range(graph.n)):
            return True, None
        return False, "a proper superset is at least as dense"
    sub, _ = induced_subgraph(graph, s_set)
    h1 = build_goldberg(sub, rho)
    target = h1.saturation_target()
    f1 = max_flow(h1.network, h1.s, h1.t, limit=target)
    if f1.value < target:
        return False, "a subset is denser (density network not saturated)"
    shortcut = build_modified(h1, f1)
    threshold = shortcut.tau.numerator  # scale * rho
    bad = t_mincut_exhaustive(shortcut.network, shortcut.t, limit=threshold)
    if bad is not None:
        return False, "a subset is denser (shortcut network has a small cut)"
    contracted, cmap = contract(graph, s_set)
    merged = cmap.forward[min(s_set)]
    h2 = build_goldberg(contracted, rho, root=merged)
    f2 = max_flow(h2.network, h2.s, h2.t)
    densest_side = min_cut_vertex_side(h2, f2)
    if densest_side != frozenset({merged}):
        return False, "a proper superset is at least as dense"
    return True, None


def verify_core(graph: WeightedGraph, k: int, candidate) -> bool:
    """True iff candidate is a dense core of graph with at most k vertices."""
    ok, _ = verify_core_explain(graph, k, candidate)
    return ok
