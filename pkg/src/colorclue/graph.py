"""Undirected simple graphs: bitset adjacency, DIMACS .col I/O, G(n,d) generation.

Vertices are 0-based internally; the DIMACS boundary converts to/from the
1-based convention of .col files.  Adjacency rows are arbitrary-precision
Python ints used as bitsets, which keeps neighborhood intersection and
popcount cheap for the pure-Python search code; packed ``uint64`` and CSR
exports feed the compiled kernels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np


class GraphFormatError(ValueError):
    """A DIMACS stream that cannot be parsed; message names the line number."""


@dataclass(frozen=True)
class RandomGraphSpec:
    """Parameters of a G(n, d) draw: each vertex pair is an edge with
    probability ``density``, independently, under a fixed seed."""

    n: int
    density: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0,1], got {self.density}")


class Graph:
    """Immutable undirected graph without self-loops or parallel edges."""

    __slots__ = ("n", "adj", "m", "name")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), name: str | None = None):
        if n < 0:
            raise ValueError(f"need n >= 0, got {n}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (adj[u] >> v) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        self.n = n
        self.adj = adj
        self.m = m
        self.name = name

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        out = []
        while row:
            b = row & -row
            out.append(b.bit_length() - 1)
            row ^= b
        return out

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            base = u + 1
            while row:
                b = row & -row
                yield (u, base + b.bit_length() - 1)
                row ^= b

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.adj)))


def density(g: Graph) -> float:
    """Edge density 2m / (n(n-1)); undefined below two vertices."""
    if g.n < 2:
        raise ValueError(f"density undefined for n={g.n}")
    return 2.0 * g.m / (g.n * (g.n - 1))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    out = Graph(g.n)
    m = 0
    adj = out.adj
    for v in range(g.n):
        adj[v] = full & ~g.adj[v] & ~(1 << v)
        m += adj[v].bit_count()
    out.m = m // 2
    return out


def generate_random(spec: RandomGraphSpec) -> Graph:
    """Draw G(n, d): pairs (u, v), u < v, visited in lexicographic order,
    each kept when ``rng.random() < d`` for ``rng = random.Random(seed)``.

    The traversal order is part of the contract so that a (spec → graph)
    mapping is stable across platforms and releases.
    """
    rng = random.Random(spec.seed)
    n, d = spec.n, spec.density
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < d:
                edges.append((u, v))
    return Graph(n, edges, name=f"rand-n{n}-d{d:g}-s{spec.seed}")


# ---------------------------------------------------------------------------
# DIMACS .col I/O
# ---------------------------------------------------------------------------

def parse_dimacs(text: str | bytes, name: str | None = None) -> Graph:
    """Parse DIMACS .col text: ``c`` comments, one ``p edge <n> <m>`` header,
    then ``e <u> <v>`` lines with 1-based endpoints.  Duplicate and reversed
    duplicate edges collapse silently; self-loops and out-of-range indices
    are errors that name the offending line.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "edges", "col"):
                raise GraphFormatError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer sizes in {line!r}") from None
            if n < 0 or declared_m < 0:
                raise GraphFormatError(f"line {lineno}: negative sizes in {line!r}")
        elif tag == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex out of range in {line!r}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {tag!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph(n, edges, name=name)


def read_dimacs(path: str | Path) -> Graph:
    path = Path(path)
    return parse_dimacs(path.read_text(), name=path.stem)


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_dimacs(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_dimacs(g))


# ---------------------------------------------------------------------------
# packed exports for the compiled kernels
# ---------------------------------------------------------------------------

def bit_rows(g: Graph) -> np.ndarray:
    """Adjacency as uint64 words, shape (n, ceil(n/64)); bit v of row u set
    iff {u,v} is an edge."""
    W = max(1, (g.n + 63) >> 6)
    out = np.zeros((g.n, W), dtype=np.uint64)
    mask = (1 << 64) - 1
    for v in range(g.n):
        row = g.adj[v]
        w = 0
        while row:
            out[v, w] = row & mask
            row >>= 64
            w += 1
    return out


def csr_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency in CSR form: (indptr int64 of len n+1, indices int32)."""
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + g.degree(v)
    indices = np.empty(indptr[-1], dtype=np.int32)
    pos = 0
    for v in range(g.n):
        for u in g.neighbors(v):
            indices[pos] = u
            pos += 1
    return indptr, indices
