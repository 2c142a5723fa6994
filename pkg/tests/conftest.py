"""Shared fixtures and strategies for the test suite."""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from colorclue.graph import Graph

settings.register_profile(
    "default",
    deadline=None,  # first calls JIT-compile kernels; wall-clock deadlines lie
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

REPO_ROOT = Path(__file__).resolve().parent.parent
INSTANCE_DIR = REPO_ROOT / "instances"
SCHEMA_DIR = REPO_ROOT / "schemas"


@pytest.fixture(scope="session")
def instance_dir() -> Path:
    return INSTANCE_DIR


@pytest.fixture(scope="session")
def schema_dir() -> Path:
    return SCHEMA_DIR


def require_instance(name: str) -> Path:
    """Path to a bundled/published instance, skipping when unavailable.

    Published random instances (DSJC*, le450_*) cannot be regenerated from
    their names; the corresponding tests run only when their original .col
    files have been placed in the instances directory.
    """
    path = INSTANCE_DIR / f"{name}.col"
    if not path.exists():
        pytest.skip(f"instance file {name}.col not available in {INSTANCE_DIR}")
    return path


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    """Arbitrary small graphs: vertex count plus an edge-set bitmask."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [pair for i, pair in enumerate(pairs) if (mask >> i) & 1]
    return Graph(n, edges)


@st.composite
def colored_graphs(draw, min_n: int = 1, max_n: int = 10, max_k: int = 5):
    """(graph, complete coloring) pairs; the coloring is arbitrary, not legal."""
    g = draw(graphs(min_n=min_n, max_n=max_n))
    k = draw(st.integers(1, max_k))
    assignment = draw(st.lists(st.integers(0, k - 1), min_size=g.n, max_size=g.n))
    return g, assignment, k
