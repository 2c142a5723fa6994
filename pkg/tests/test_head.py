"""Tests for the two-individual memetic solver and its operators."""

from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from colorclue.coloring import Coloring, canonical_key, conflicts, is_legal
from colorclue.graph import Graph
from colorclue.head import (
    STATUS_GENERATIONS,
    STATUS_SOLVED,
    STATUS_TIME,
    SolverConfig,
    SolverOutcome,
    gpx_crossover,
    head_solve,
    outcome_to_json,
    random_coloring,
    tabu_search,
)
from colorclue.instances import build_instance

K4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def _col(values, k):
    return Coloring.from_sequence(values, k)


class TestSolverConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SolverConfig(k=0)
        with pytest.raises(ValueError):
            SolverConfig(k=3, tabu_iterations=0)
        with pytest.raises(ValueError):
            SolverConfig(k=3, time_budget=0.0)
        with pytest.raises(ValueError):
            SolverConfig(k=3, tenure_slope=-0.1)

    def test_json_roundtrip(self):
        cfg = SolverConfig(k=5, tabu_iterations=123, seed=99)
        assert SolverConfig.from_json(cfg.to_json()) == cfg
        import json

        assert SolverConfig.from_json(json.dumps(cfg.to_json())) == cfg


class TestRandomColoring:
    def test_deterministic_and_in_range(self):
        g = Graph(20, [])
        a = random_coloring(g, 4, random.Random(3))
        b = random_coloring(g, 4, random.Random(3))
        assert a == b
        assert set(int(x) for x in a.assignment) <= {0, 1, 2, 3}

    def test_k_one(self):
        g = Graph(5, [])
        c = random_coloring(g, 1, random.Random(0))
        assert list(c.assignment) == [0] * 5

    def test_class_occupancy_statistics(self):
        g = Graph(200, [])
        rng = random.Random(11)
        counts = [
            sum(1 for x in random_coloring(g, 10, rng).assignment if x == 0)
            for _ in range(50)
        ]
        mean = sum(counts) / len(counts)
        assert abs(mean - 20.0) < 3 * (200 * 0.1 * 0.9 / 50) ** 0.5


class TestTabuSearch:
    def test_legal_start_is_returned_unchanged(self):
        start = _col([0, 1, 2, 3], 4)
        out = tabu_search(K4, start, 4, 100, random.Random(0))
        assert out == start

    def test_solves_k4(self):
        for seed in range(10):
            start = _col([0, 0, 1, 2], 4)
            out = tabu_search(K4, start, 4, 200, random.Random(seed))
            assert conflicts(K4, out) == 0

    def test_k_one_with_conflicts_is_a_fixed_point(self):
        g = Graph(3, [(0, 1), (1, 2)])
        start = _col([0, 0, 0], 1)
        out = tabu_search(g, start, 1, 500, random.Random(1))
        assert conflicts(g, out) == 2  # nothing a 1-class search could do

    def test_deterministic_given_rng(self):
        g = build_instance("queen5_5")
        start = random_coloring(g, 5, random.Random(7))
        a = tabu_search(g, start, 5, 300, random.Random(42))
        b = tabu_search(g, start, 5, 300, random.Random(42))
        assert a == b

    def test_validation(self):
        with pytest.raises(ValueError):
            tabu_search(K4, _col([0, -1, 0, 0], 2), 2, 10, random.Random(0))
        with pytest.raises(ValueError):
            tabu_search(K4, _col([0, 1], 2), 2, 10, random.Random(0))
        with pytest.raises(ValueError):
            tabu_search(K4, _col([0, 1, 2, 3], 4), 3, 10, random.Random(0))

    @given(graphs(min_n=1, max_n=10), st.integers(1, 4), st.integers(0, 2**32 - 1))
    @settings(max_examples=30)
    def test_never_worse_than_start(self, g, k, seed):
        rng = random.Random(seed)
        start = random_coloring(g, k, rng)
        out = tabu_search(g, start, k, 100, rng)
        assert conflicts(g, out) <= conflicts(g, start)
        assert out.is_complete() and out.k == k


class TestGpxCrossover:
    def test_hand_worked_example(self):
        p1 = _col([0, 0, 0, 1, 1, 2], 3)
        p2 = _col([0, 1, 1, 2, 2, 2], 3)
        child = gpx_crossover(p1, p2, 3, random.Random(0))
        assert list(child.assignment) == [0, 0, 0, 1, 1, 1]

    def test_identical_parents_reproduce_partition(self):
        p = _col([0, 1, 0, 2, 1], 3)
        child = gpx_crossover(p, p, 3, random.Random(5))
        assert canonical_key(child) == canonical_key(p)

    def test_deterministic(self):
        p1 = _col([0, 1, 2, 0, 1, 2, 0], 3)
        p2 = _col([2, 2, 1, 1, 0, 0, 0], 3)
        a = gpx_crossover(p1, p2, 3, random.Random(9))
        b = gpx_crossover(p1, p2, 3, random.Random(9))
        assert a == b

    def test_validation(self):
        with pytest.raises(ValueError):
            gpx_crossover(_col([0, 1], 2), _col([0], 2), 2, random.Random(0))
        with pytest.raises(ValueError):
            gpx_crossover(_col([0, -1], 2), _col([0, 1], 2), 2, random.Random(0))
        with pytest.raises(ValueError):
            gpx_crossover(_col([0, 1], 2), _col([0, 1], 2), 0, random.Random(0))

    @given(
        st.integers(1, 12),
        st.integers(1, 5),
        st.integers(0, 2**32 - 1),
    )
    @settings(max_examples=40)
    def test_child_is_complete_with_at_most_k_classes(self, n, k, seed):
        rng = random.Random(seed)
        p1 = _col([rng.randrange(k) for _ in range(n)], k)
        p2 = _col([rng.randrange(k) for _ in range(n)], k)
        child = gpx_crossover(p1, p2, k, rng)
        assert child.is_complete()
        assert child.n == n and child.k == k


class TestHeadSolve:
    def test_empty_graph(self):
        out = head_solve(Graph(0, []), SolverConfig(k=3))
        assert out.status == STATUS_SOLVED and out.coloring.n == 0

    def test_solves_k4(self):
        out = head_solve(K4, SolverConfig(k=4, seed=1, time_budget=10.0))
        assert out.status == STATUS_SOLVED
        assert is_legal(K4, out.coloring)
        assert out.best_conflicts == 0

    @pytest.mark.parametrize("seed", range(5))
    def test_solves_myciel3_many_seeds(self, seed):
        g = build_instance("myciel3")
        out = head_solve(g, SolverConfig(k=4, seed=seed, time_budget=30.0))
        assert out.status == STATUS_SOLVED
        assert is_legal(g, out.coloring)
        assert out.coloring.k == 4

    def test_solves_queen6_6(self):
        g = build_instance("queen6_6")
        out = head_solve(g, SolverConfig(k=7, seed=0, time_budget=30.0))
        assert out.status == STATUS_SOLVED
        assert is_legal(g, out.coloring)

    def test_infeasible_exhausts_generations(self):
        out = head_solve(
            K4,
            SolverConfig(k=3, seed=2, max_generations=30, time_budget=20.0,
                         tabu_iterations=100),
        )
        assert out.status == STATUS_GENERATIONS
        assert out.coloring is None
        assert out.generations == 30
        assert out.best_conflicts >= 1
        assert out.iterations_total > 0

    def test_infeasible_exhausts_time(self):
        out = head_solve(
            K4,
            SolverConfig(k=3, seed=2, time_budget=0.05, tabu_iterations=50),
        )
        assert out.status == STATUS_TIME
        assert out.coloring is None
        assert out.elapsed >= 0.05

    def test_k_one_on_edged_graph_terminates(self):
        g = Graph(3, [(0, 1), (1, 2)])
        out = head_solve(
            g, SolverConfig(k=1, seed=0, max_generations=5, time_budget=5.0)
        )
        assert out.status == STATUS_GENERATIONS
        assert out.best_conflicts == 2

    def test_deterministic_given_seed(self):
        g = build_instance("queen5_5")
        cfg = SolverConfig(k=5, seed=31, time_budget=30.0)
        a, b = head_solve(g, cfg), head_solve(g, cfg)
        assert (a.status, a.generations, a.iterations_total) == (
            b.status,
            b.generations,
            b.iterations_total,
        )
        assert canonical_key(a.coloring) == canonical_key(b.coloring)

    def test_outcome_json_shape(self):
        out = head_solve(K4, SolverConfig(k=4, seed=1))
        d = outcome_to_json(out)
        assert d["status"] == "solved"
        assert d["coloring"].startswith("s ")
        assert set(d) == {
            "status",
            "generations",
            "iterations_total",
            "elapsed_s",
            "best_conflicts",
            "coloring",
        }
