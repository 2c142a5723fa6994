"""Benchmark-instance builders and a by-name loader.

Two well-known families are generated structurally (the counts this package
cares about are isomorphism invariants, so a structurally identical graph is
as good as a distributed file):

* ``queen{r}_{c}``: one vertex per square of an r×c board, edges between
  squares a queen attacks (same row, column, or diagonal).
* ``myciel{t}``: iterated triangle-free construction starting from a single
  edge; each round maps a graph (V, E) to vertices V ∪ V' ∪ {z} with edges
  E ∪ {{u, v'} : {u,v} ∈ E} ∪ {{v', z}}, raising the chromatic number by
  one while adding no triangle.  ``myciel2`` is the 5-cycle, ``myciel3`` the
  11-vertex graph of the DIMACS suite.

Other published instances (DSJC*, le450_*) are specific random draws that
cannot be regenerated from their names; drop their .col files into an
instance directory and ``load_instance`` picks them up.
"""

from __future__ import annotations

import os
import re
from pathlib import Path

from .graph import Graph, read_dimacs

_QUEEN_RE = re.compile(r"^queen(\d+)_(\d+)$")
_MYCIEL_RE = re.compile(r"^myciel(\d+)$")


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)], name=f"K{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)], name=f"C{n}")


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)], name=f"P{n}")


def queen_graph(rows: int, cols: int | None = None) -> Graph:
    """Queen-attack graph on a rows×cols board (square when cols omitted)."""
    if cols is None:
        cols = rows
    if rows < 1 or cols < 1:
        raise ValueError("board sides must be positive")
    n = rows * cols
    edges = []
    for a in range(n):
        ra, ca = divmod(a, cols)
        for b in range(a + 1, n):
            rb, cb = divmod(b, cols)
            if ra == rb or ca == cb or ra - ca == rb - cb or ra + ca == rb + cb:
                edges.append((a, b))
    return Graph(n, edges, name=f"queen{rows}_{cols}")


def mycielskian(g: Graph) -> Graph:
    """One round of the triangle-free chromatic-number-raising construction."""
    n = g.n
    edges = list(g.edges())
    new_edges = list(edges)
    for u, v in edges:
        new_edges.append((u, n + v))
        new_edges.append((v, n + u))
    z = 2 * n
    for v in range(n):
        new_edges.append((n + v, z))
    return Graph(2 * n + 1, new_edges)


def myciel_graph(t: int) -> Graph:
    """The DIMACS ``myciel{t}`` graph: t−1 construction rounds from K2."""
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    g = complete_graph(2)
    for _ in range(t - 1):
        g = mycielskian(g)
    return Graph(g.n, g.edges(), name=f"myciel{t}")


def build_instance(name: str) -> Graph | None:
    """Construct a known instance from its conventional name, else None."""
    m = _QUEEN_RE.match(name)
    if m:
        return queen_graph(int(m.group(1)), int(m.group(2)))
    m = _MYCIEL_RE.match(name)
    if m:
        return myciel_graph(int(m.group(1)))
    return None


def default_instance_dirs() -> list[Path]:
    dirs = []
    env = os.environ.get("COLORCLUE_INSTANCES")
    if env:
        dirs.extend(Path(p) for p in env.split(os.pathsep) if p)
    dirs.append(Path("instances"))
    return dirs


def load_instance(spec: str | Path, search_dirs: list[Path] | None = None) -> Graph:
    """Resolve an instance argument: an existing .col path, a file in the
    search directories, or a generatable name (queen/myciel families)."""
    path = Path(spec)
    if path.exists():
        return read_dimacs(path)
    name = str(spec)
    for d in search_dirs if search_dirs is not None else default_instance_dirs():
        candidate = d / f"{name}.col"
        if candidate.exists():
            return read_dimacs(candidate)
    built = build_instance(name)
    if built is not None:
        return built
    raise FileNotFoundError(
        f"instance {spec!r}: no such file, not in instance directories, "
        f"and not a generatable name"
    )
