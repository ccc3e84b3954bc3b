"""Internal consistency of the brute-force reference implementations."""

from __future__ import annotations

import random
from fractions import Fraction as Fr

import pytest

from laminar import (
    SizeGuardError,
    WeightedGraph,
    brute_dense_core,
    brute_hierarchy,
    brute_max_skew_density,
    brute_min_ratio_cut,
    brute_t_mincut,
    skew_density,
)
from laminar.oracle import set_partitions

from .conftest import random_connected_graph, random_digraph


class TestSetPartitions:
    @pytest.mark.parametrize("n,bell", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_bell_numbers(self, n, bell):
        assert sum(1 for _ in set_partitions(list(range(n)))) == bell

    def test_blocks_partition_items(self):
        items = [4, 7, 9]
        for blocks in set_partitions(items):
            flattened = sorted(x for b in blocks for x in b)
            assert flattened == items


class TestMinRatioCut:
    def test_golden_path(self, trubin_path):
        ratio, cut = brute_min_ratio_cut(trubin_path)
        assert ratio == Fr(1)
        assert set(cut.sides) == {frozenset({0, 1}), frozenset({2, 3})}

    def test_triangle_all_singleton(self, unit_triangle):
        ratio, cut = brute_min_ratio_cut(unit_triangle)
        assert ratio == Fr(3, 2)
        assert len(cut.sides) == 3

    def test_single_edge(self):
        g = WeightedGraph.from_edges(2, [(0, 1, 9)])
        ratio, cut = brute_min_ratio_cut(g)
        assert ratio == Fr(9) and len(cut.sides) == 2

    def test_maximal_cut_is_min_ratio(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(2, 7))
            ratio, cut = brute_min_ratio_cut(g)
            assert cut.ratio == ratio

    def test_size_guard(self):
        g = random_connected_graph(random.Random(0), 11)
        with pytest.raises(SizeGuardError):
            brute_min_ratio_cut(g)

    def test_min_ratio_cuts_closed_under_union(self):
        # Deleting the boundaries of any two ratio-minimizing partitions
        # leaves components that again form a ratio-minimizing partition whose
        # boundary is exactly the union.
        from itertools import combinations

        from laminar import MultiwayCut, connected_components
        from laminar.oracle import set_partitions

        rng = random.Random(27)
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(2, 6), max_weight=4)
            cuts = []
            best = None
            for blocks in set_partitions(list(range(g.n))):
                if len(blocks) < 2:
                    continue
                cut = MultiwayCut(g, blocks)
                if best is None or cut.ratio < best:
                    best = cut.ratio
                    cuts = [cut]
                elif cut.ratio == best:
                    cuts.append(cut)
            for p, q in combinations(cuts, 2):
                union = p.boundary | q.boundary
                keep = [i for i in range(g.m) if i not in union]
                merged = MultiwayCut(g, connected_components(g, keep))
                assert merged.ratio == best
                assert merged.boundary == union


class TestMaxSkewDensity:
    def test_golden_path(self, trubin_path):
        assert brute_max_skew_density(trubin_path) == (Fr(100), frozenset({2, 3}))

    def test_unit_k4(self, unit_k4):
        assert brute_max_skew_density(unit_k4) == (Fr(2), frozenset(range(4)))

    def test_edgeless_singleton_convention(self):
        g = WeightedGraph.from_edges(3, [])
        assert brute_max_skew_density(g) == (Fr(0), frozenset({0}))

    def test_maximizer_is_dense_core(self):
        rng = random.Random(6)
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 8))
            _, best = brute_max_skew_density(g)
            assert brute_dense_core(g, best)

    def test_largest_maximizer_returned(self):
        # Two tied pairs plus their union at the same density.
        g = WeightedGraph.from_edges(4, [(0, 1, 2), (2, 3, 2), (1, 2, 2)])
        density, best = brute_max_skew_density(g)
        assert density == Fr(2)
        assert best == frozenset({0, 1, 2, 3})


class TestDenseCore:
    def test_path_cases(self, trubin_path):
        assert brute_dense_core(trubin_path, {2, 3})
        assert not brute_dense_core(trubin_path, {0, 1})
        assert not brute_dense_core(trubin_path, {0, 1, 2, 3})

    def test_definition_matches_quantifiers(self):
        rng = random.Random(15)
        from itertools import combinations

        for _ in range(8):
            g = random_connected_graph(rng, rng.randint(2, 6))
            vertices = range(g.n)
            for size in range(1, g.n + 1):
                for subset in combinations(vertices, size):
                    s = frozenset(subset)
                    rho = skew_density(g, s)
                    expected = all(
                        skew_density(g, w) <= rho
                        for k in range(1, len(s) + 1)
                        for w in combinations(sorted(s), k)
                    ) and all(
                        skew_density(g, s | frozenset(extra)) < rho
                        for k in range(1, g.n - len(s) + 1)
                        for extra in combinations(sorted(set(vertices) - s), k)
                    )
                    assert brute_dense_core(g, s) == expected


class TestBruteHierarchy:
    def test_root_children_are_min_ratio_cut(self):
        rng = random.Random(21)
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(2, 7))
            tree = brute_hierarchy(g)
            ratio, cut = brute_min_ratio_cut(g)
            assert tree.root.sigma == ratio
            assert {c.vertex_set for c in tree.root.children} == set(cut.sides)

    def test_deterministic(self):
        g = random_connected_graph(random.Random(5), 6)
        first = brute_hierarchy(g)
        second = brute_hierarchy(g)
        assert first.root == second.root


class TestBruteTMincut:
    def test_deterministic_tie_break(self):
        rng = random.Random(44)
        for _ in range(10):
            net = random_digraph(rng, 5)
            assert brute_t_mincut(net, 4) == brute_t_mincut(net, 4)

    def test_size_guard(self):
        from laminar import DirectedNetwork

        with pytest.raises(SizeGuardError):
            brute_t_mincut(DirectedNetwork(21), 0)
