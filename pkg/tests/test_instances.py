"""Tests for named instance construction and resolution."""

from __future__ import annotations

import pytest

from colorclue.graph import Graph
from colorclue.instances import (
    build_instance,
    complete_graph,
    cycle_graph,
    load_instance,
    myciel_graph,
    mycielskian,
    path_graph,
    queen_graph,
)


class TestBasicFamilies:
    def test_complete(self):
        g = complete_graph(5)
        assert g.n == 5 and g.m == 10

    def test_cycle_and_path(self):
        assert cycle_graph(5).m == 5
        assert path_graph(5).m == 4


class TestQueen:
    # Published DIMACS sizes for the queen benchmark family.
    @pytest.mark.parametrize(
        "r, c, n, m",
        [(5, 5, 25, 160), (6, 6, 36, 290), (7, 7, 49, 476),
         (8, 8, 64, 728), (9, 9, 81, 1056)],
    )
    def test_published_sizes(self, r, c, n, m):
        g = queen_graph(r, c)
        assert g.n == n and g.m == m

    def test_attacks(self):
        g = queen_graph(4, 4)
        assert g.has_edge(0, 3)  # same row
        assert g.has_edge(0, 12)  # same column
        assert g.has_edge(0, 15)  # main diagonal
        assert g.has_edge(3, 12)  # antidiagonal
        assert not g.has_edge(0, 6)  # knight's move apart

    def test_rectangular(self):
        g = queen_graph(2, 3)
        assert g.n == 6


class TestMycielski:
    def test_operator_shape(self):
        k2 = complete_graph(2)
        m = mycielskian(k2)
        assert m.n == 5 and m.m == 5  # C5

    def test_published_sizes(self):
        g3 = myciel_graph(3)
        g4 = myciel_graph(4)
        assert (g3.n, g3.m) == (11, 20)
        assert (g4.n, g4.m) == (23, 71)

    def test_triangle_free(self):
        g = myciel_graph(4)
        for u, v in g.edges():
            assert not (g.adj[u] & g.adj[v])

    def test_min_index(self):
        with pytest.raises(ValueError):
            myciel_graph(1)


class TestResolution:
    def test_build_by_name(self):
        assert build_instance("queen5_5").n == 25
        assert build_instance("myciel4").n == 23
        assert build_instance("notafamily99") is None

    def test_load_from_explicit_path(self, instance_dir):
        g = load_instance(instance_dir / "queen6_6.col")
        assert g.n == 36 and g.name == "queen6_6"

    def test_load_prefers_file_over_builder(self, tmp_path, monkeypatch):
        # A file in the search path shadows the synthetic family.
        (tmp_path / "queen5_5.col").write_text("p edge 2 1\ne 1 2\n")
        monkeypatch.setenv("COLORCLUE_INSTANCES", str(tmp_path))
        g = load_instance("queen5_5")
        assert g.n == 2

    def test_load_unknown_raises(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        with pytest.raises(FileNotFoundError):
            load_instance("DSJC125.9")
