"""Command-line behavior: formats, determinism, exit codes."""

from __future__ import annotations

import json

import pytest

from laminar import WeightedGraph, build_hierarchy
from laminar.cli import hierarchy_from_json, hierarchy_to_json, main
from laminar.graph import format_edge_list

from .conftest import random_connected_graph

PATH_TEXT = "# golden path\n4 3\n0 1 2\n1 2 1\n2 3 100\n"


@pytest.fixture
def path_file(tmp_path):
    target = tmp_path / "path.txt"
    target.write_text(PATH_TEXT)
    return str(target)


def run_cli(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommands:
    def test_arboricity(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "arboricity", path_file)
        assert code == 0
        assert "arboricity: 100" in out
        assert "fractional: 100/1" in out

    def test_strength(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "strength", path_file)
        assert code == 0 and "strength: 1/1" in out

    def test_hierarchy_json(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "hierarchy", path_file, "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["sigma"] == "1/1"
        child_sigmas = sorted(c["sigma"] for c in data["children"])
        assert child_sigmas == ["100/1", "2/1"]

    def test_hierarchy_dot(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "hierarchy", path_file, "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")
        assert "sigma=100/1" in out

    def test_ideal_loads(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "ideal-loads", path_file)
        assert code == 0
        assert out.count("load 1/1") == 3
        assert "sum: 3/1" in out

    def test_densest(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "densest", path_file, "--k", "2")
        assert code == 0
        assert "densest: 2,3" in out and "density: 100/1" in out

    def test_verify_core(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "verify-core", path_file, "--set", "2,3")
        assert code == 0 and out.strip() == "true"
        code, out, _ = run_cli(capsys, "verify-core", path_file, "--set", "0,1")
        assert code == 0 and out.startswith("false")
        assert "superset" in out

    def test_oracle_min_ratio_cut(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "oracle", "min-ratio-cut", path_file)
        assert code == 0
        assert "ratio: 1/1" in out and "{0,1}; {2,3}" in out

    def test_oracle_density_and_core(self, capsys, path_file):
        code, out, _ = run_cli(capsys, "oracle", "max-skew-density", path_file)
        assert code == 0 and "density: 100/1" in out
        code, out, _ = run_cli(
            capsys, "oracle", "dense-core", path_file, "--set", "2,3"
        )
        assert code == 0 and out.strip() == "true"

    def test_entropy_check(self, capsys, path_file):
        code, out, _ = run_cli(
            capsys, "entropy-check", path_file, "--iterations", "200"
        )
        assert code == 0
        assert "gap" in out

    def test_randomized_mode(self, capsys, path_file):
        code, out, _ = run_cli(
            capsys, "hierarchy", path_file, "--mode", "randomized", "--seed", "5"
        )
        assert code == 0 and "sigma=100/1" in out


class TestJsonRoundTrip:
    def test_tree_round_trips(self):
        import random

        for trial in range(5):
            g = random_connected_graph(random.Random(trial), 6)
            tree = build_hierarchy(g)
            rebuilt = hierarchy_from_json(hierarchy_to_json(tree), g)
            assert rebuilt.root == tree.root

    def test_byte_identical_given_seed(self, capsys, path_file):
        first = run_cli(capsys, "hierarchy", path_file, "--seed", "3", "--format", "json")
        second = run_cli(capsys, "hierarchy", path_file, "--seed", "3", "--format", "json")
        assert first == second

    def test_byte_identical_randomized_mode(self, capsys, path_file):
        args = ("densest", path_file, "--mode", "randomized", "--seed", "7")
        assert run_cli(capsys, *args) == run_cli(capsys, *args)


class TestErrors:
    def test_malformed_line_number(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("2 1\n0 2 5\n")
        code, _, err = run_cli(capsys, "arboricity", str(bad))
        assert code == 2
        assert "line 2" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "arboricity", "/nonexistent/graph.txt")
        assert code == 2 and "cannot read" in err

    def test_disconnected_names_components(self, capsys, tmp_path):
        target = tmp_path / "two.txt"
        target.write_text("4 2\n0 1 3\n2 3 4\n")
        code, _, err = run_cli(capsys, "strength", str(target))
        assert code == 2
        assert "{0,1}" in err and "{2,3}" in err

    def test_size_guard_exit_code(self, capsys, tmp_path):
        g = random_connected_graph(__import__("random").Random(1), 11)
        target = tmp_path / "big.txt"
        target.write_text(format_edge_list(g))
        code, _, err = run_cli(capsys, "oracle", "min-ratio-cut", str(target))
        assert code == 3

    def test_empty_edge_input(self, capsys, tmp_path):
        target = tmp_path / "empty.txt"
        target.write_text("3 0\n")
        code, out, _ = run_cli(capsys, "arboricity", str(target))
        assert code == 0 and "arboricity: 0" in out


class TestPerComponent:
    def test_arboricity_max_over_components(self, capsys, tmp_path):
        target = tmp_path / "two.txt"
        target.write_text("5 3\n0 1 3\n2 3 4\n3 4 4\n")
        code, out, _ = run_cli(capsys, "arboricity", str(target), "--per-component")
        assert code == 0
        assert "arboricity: 4" in out

    def test_strength_per_component(self, capsys, tmp_path):
        target = tmp_path / "two.txt"
        target.write_text("4 2\n0 1 3\n2 3 5\n")
        code, out, _ = run_cli(capsys, "strength", str(target), "--per-component")
        assert code == 0
        assert "strength: 3/1" in out  # minimum over components
