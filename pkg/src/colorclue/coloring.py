"""Colorings as vertex partitions: conflicts, canonical keys, partition distance.

A coloring assigns each vertex a class in ``0..k-1`` or the ``UNCOLORED``
sentinel.  Two complete colorings that differ only by a permutation of class
labels induce the same partition; ``canonical_key`` collapses that orbit to a
hashable representative, and ``partition_distance`` measures how far apart two
partitions are (minimum number of vertices to move).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graph import Graph

UNCOLORED = -1

#: Hashable partition representative: per-vertex class indices relabeled by
#: first appearance.
CanonicalKey = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Coloring:
    """Per-vertex class assignment under a color budget ``k``."""

    assignment: np.ndarray
    k: int

    def __post_init__(self) -> None:
        arr = np.asarray(self.assignment, dtype=np.int32)
        object.__setattr__(self, "assignment", arr)
        if self.k < 1:
            raise ValueError(f"color budget must be positive, got k={self.k}")
        if arr.ndim != 1:
            raise ValueError("assignment must be one-dimensional")
        if arr.size and (arr.min() < UNCOLORED or arr.max() >= self.k):
            raise ValueError(f"class indices must lie in {{-1}} ∪ [0, {self.k})")

    @property
    def n(self) -> int:
        return int(self.assignment.shape[0])

    def is_complete(self) -> bool:
        return bool((self.assignment != UNCOLORED).all())

    def classes(self) -> list[list[int]]:
        """Nonempty color classes as vertex lists, indexed by class label."""
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            if c != UNCOLORED:
                out.setdefault(int(c), []).append(v)
        return [out[c] for c in sorted(out)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.assignment, other.assignment)

    def __len__(self) -> int:
        return self.n

    @staticmethod
    def from_sequence(values: Sequence[int] | Iterable[int], k: int) -> "Coloring":
        return Coloring(np.asarray(list(values), dtype=np.int32), k)


def _require_complete(c: Coloring, op: str) -> None:
    if not c.is_complete():
        raise ValueError(f"{op} requires a complete coloring")


def conflicts(g: Graph, c: Coloring) -> int:
    """Number of edges whose endpoints share a class."""
    _require_complete(c, "conflicts")
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")
    assignment = c.assignment
    total = 0
    for u, v in g.edges():
        if assignment[u] == assignment[v]:
            total += 1
    return total


def is_legal(g: Graph, c: Coloring) -> bool:
    return conflicts(g, c) == 0


def canonical_key(c: Coloring) -> CanonicalKey:
    """Relabel classes by first appearance scanning vertices 0..n-1.

    Equal keys ⇔ equal partitions, independent of how the classes were
    numbered, so keys dedup sampled colorings in O(1) per lookup.
    """
    _require_complete(c, "canonical_key")
    relabel: dict[int, int] = {}
    out = []
    for raw in c.assignment:
        raw = int(raw)
        label = relabel.get(raw)
        if label is None:
            label = len(relabel)
            relabel[raw] = label
        out.append(label)
    return tuple(out)


def partition_distance(c1: Coloring, c2: Coloring) -> int:
    """Vertices that must change class to turn one partition into the other.

    Equals n minus the best total overlap over one-to-one matchings between
    the classes of ``c1`` and ``c2`` (exact assignment on the overlap
    matrix).  Zero iff the two colorings induce the same partition.
    """
    _require_complete(c1, "partition_distance")
    _require_complete(c2, "partition_distance")
    if c1.n != c2.n:
        raise ValueError(f"vertex-count mismatch: {c1.n} vs {c2.n}")
    a, b = c1.assignment, c2.assignment
    # Compact labels to 0..k-1 before building the overlap matrix.
    la, inva = np.unique(a, return_inverse=True)
    lb, invb = np.unique(b, return_inverse=True)
    overlap = np.zeros((la.size, lb.size), dtype=np.int64)
    np.add.at(overlap, (inva, invb), 1)
    rows, cols = linear_sum_assignment(overlap, maximize=True)
    return int(c1.n - overlap[rows, cols].sum())


# ---------------------------------------------------------------------------
# serialization ("s <class_0> ... <class_{n-1}>")
# ---------------------------------------------------------------------------

def coloring_line(c: Coloring) -> str:
    return " ".join(["s", *(str(int(x)) for x in c.assignment)])


def parse_coloring_line(line: str, k: int | None = None) -> Coloring:
    fields = line.split()
    if not fields or fields[0] != "s":
        raise ValueError(f"expected a line starting with 's', got {line!r}")
    values = [int(x) for x in fields[1:]]
    if k is None:
        k = max((v for v in values if v != UNCOLORED), default=0) + 1
        k = max(k, 1)
    return Coloring.from_sequence(values, k)
