"""Exact counting of k-colorings-as-partitions and chromatic-number bounds.

``count_colorings`` counts the distinct partitions of the vertex set into at
most k independent sets.  The search is saturation-guided backtracking where
a branch may open at most one new class beyond those already used on the
path; that canonical rule yields each partition exactly once, with no k!
label inflation.  Counting admits no bound-based pruning (every completion
must be visited), only the structural k cutoff.

A compiled kernel runs the common case (k ≤ 64); a pure-Python twin handles
arbitrary k and solution callbacks, and doubles as an internal cross-check.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .coloring import Coloring
from .graph import Graph, bit_rows, csr_arrays

LIMIT_NONE = "none"
LIMIT_TIME = "time"
LIMIT_NODE = "node_cap"
LIMIT_VALUE = "value_cap"


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for a counting/decision search.

    ``value_cap`` stops the search once the count *exceeds* the cap (so a
    cap of 0 turns counting into a pure existence test).
    """

    time_budget: float = 2400.0
    node_cap: int | None = None
    value_cap: int | None = None

    def __post_init__(self) -> None:
        if not self.time_budget > 0:
            raise ValueError(f"time_budget must be positive, got {self.time_budget}")
        if self.node_cap is not None and self.node_cap < 1:
            raise ValueError("node_cap must be positive when set")
        if self.value_cap is not None and self.value_cap < 0:
            raise ValueError("value_cap must be nonnegative when set")


@dataclass
class CountResult:
    value: int
    exact: bool
    limit_hit: str  # one of LIMIT_*
    nodes: int
    elapsed: float

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "limit_hit": self.limit_hit,
            "nodes": self.nodes,
            "elapsed_s": self.elapsed,
        }


class _Stop(Exception):
    def __init__(self, limit: str):
        self.limit = limit


def count_colorings(
    g: Graph,
    k: int,
    limits: SearchLimits | None = None,
    on_solution: Callable[[Coloring], None] | None = None,
) -> CountResult:
    """Count partitions of V(g) into at most ``k`` independent sets.

    When ``exact`` is false the value is a lower bound on the true count
    and ``limit_hit`` names the binding budget.  ``on_solution``, if given,
    receives each solution as a complete ``Coloring`` (class labels follow
    the search's own numbering; canonicalize to compare) and forces the
    pure-Python engine.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    limits = limits or SearchLimits()
    if g.n == 0:
        return CountResult(1, True, LIMIT_NONE, 0, 0.0)
    k_eff = min(k, g.n)
    if on_solution is None and k_eff <= 64:
        return _count_numba(g, k_eff, limits)
    return _count_py(g, k_eff, limits, on_solution)


def _count_numba(g: Graph, k: int, limits: SearchLimits) -> CountResult:
    t0 = time.monotonic()
    deadline = t0 + limits.time_budget
    n = g.n
    rows = bit_rows(g)
    indptr, indices = csr_arrays(g)
    W = rows.shape[1]
    sel = np.full(n, -1, dtype=np.int32)
    cc = np.full(n, -1, dtype=np.int32)
    used = np.zeros(n, dtype=np.int32)
    sat_count = np.zeros((n, k), dtype=np.int32)
    sat_mask = np.zeros(n, dtype=np.uint64)
    uncolored = np.zeros(W, dtype=np.uint64)
    for v in range(n):
        uncolored[v >> 6] |= np.uint64(1 << (v & 63))
    ctl = np.zeros(_kernels.CTL_SIZE, dtype=np.int64)
    value_cap = -1 if limits.value_cap is None else limits.value_cap
    node_cap = -1 if limits.node_cap is None else limits.node_cap

    chunk = 1 << 14
    limit_hit = LIMIT_NONE
    exact = False
    while True:
        step_start = time.monotonic()
        if step_start >= deadline:
            limit_hit = LIMIT_TIME
            break
        status = _kernels.count_colorings_chunk(
            rows, indptr, indices, k, sel, cc, used,
            sat_count, sat_mask, uncolored, ctl,
            chunk, value_cap, node_cap,
        )
        if status == _kernels.DONE:
            exact = True
            break
        if status == _kernels.VALUE_CAPPED:
            limit_hit = LIMIT_VALUE
            break
        if status == _kernels.NODE_CAPPED:
            limit_hit = LIMIT_NODE
            break
        if time.monotonic() - step_start < 0.1 and chunk < (1 << 22):
            chunk <<= 1
    return CountResult(
        value=int(ctl[_kernels.CTL_COUNT]),
        exact=exact,
        limit_hit=limit_hit,
        nodes=int(ctl[_kernels.CTL_NODES]),
        elapsed=time.monotonic() - t0,
    )


def _count_py(
    g: Graph,
    k: int,
    limits: SearchLimits,
    on_solution: Callable[[Coloring], None] | None,
) -> CountResult:
    t0 = time.monotonic()
    deadline = t0 + limits.time_budget
    n = g.n
    adj = g.adj
    sat_mask = [0] * n
    sat_count = [[0] * k for _ in range(n)]
    assignment = [-1] * n
    state = {"count": 0, "nodes": 0, "uncolored": (1 << n) - 1}
    node_cap = limits.node_cap
    value_cap = limits.value_cap

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def select() -> int:
        unc = state["uncolored"]
        best_v, best_s, best_d = -1, -1, -1
        m = unc
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            s = sat_mask[v].bit_count()
            if s < best_s:
                continue
            d = (adj[v] & unc).bit_count()
            if s > best_s or d > best_d:
                best_v, best_s, best_d = v, s, d
        return best_v

    def rec(used: int) -> None:
        v = select()
        state["uncolored"] ^= 1 << v
        row = adj[v]
        limit = min(used + 1, k)
        for c in range(limit):
            if (sat_mask[v] >> c) & 1:
                continue
            state["nodes"] += 1
            nodes = state["nodes"]
            if nodes % 2048 == 0 and time.monotonic() >= deadline:
                raise _Stop(LIMIT_TIME)
            if node_cap is not None and nodes >= node_cap:
                raise _Stop(LIMIT_NODE)
            assignment[v] = c
            m = row
            while m:
                b = m & -m
                m ^= b
                u = b.bit_length() - 1
                sat_count[u][c] += 1
                if sat_count[u][c] == 1:
                    sat_mask[u] |= 1 << c
            try:
                if state["uncolored"] == 0:
                    state["count"] += 1
                    if on_solution is not None:
                        on_solution(Coloring.from_sequence(assignment, k))
                    if value_cap is not None and state["count"] > value_cap:
                        raise _Stop(LIMIT_VALUE)
                else:
                    rec(max(used, c + 1))
            finally:
                m = row
                while m:
                    b = m & -m
                    m ^= b
                    u = b.bit_length() - 1
                    sat_count[u][c] -= 1
                    if sat_count[u][c] == 0:
                        sat_mask[u] &= ~(1 << c)
                assignment[v] = -1
        state["uncolored"] |= 1 << v

    limit_hit = LIMIT_NONE
    exact = False
    try:
        rec(0)
        exact = True
    except _Stop as stop:
        limit_hit = stop.limit
    return CountResult(
        value=state["count"],
        exact=exact,
        limit_hit=limit_hit,
        nodes=state["nodes"],
        elapsed=time.monotonic() - t0,
    )


# ---------------------------------------------------------------------------
# brute-force oracle (direct set-partition enumeration)
# ---------------------------------------------------------------------------

def brute_force_count(g: Graph, k: int) -> int:
    """Count partitions into ≤ k independent sets by enumerating all set
    partitions in restricted-growth order.  Oracle only; refuses n > 14."""
    if g.n > 14:
        raise ValueError(f"brute_force_count refuses n={g.n} > 14")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    n = g.n
    adj = g.adj
    blocks: list[int] = []
    count = 0

    def rec(v: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            return
        bit = 1 << v
        row = adj[v]
        for i, blk in enumerate(blocks):
            if not (row & blk):
                blocks[i] = blk | bit
                rec(v + 1)
                blocks[i] = blk
        if len(blocks) < k:
            blocks.append(bit)
            rec(v + 1)
            blocks.pop()

    rec(0)
    return count


# ---------------------------------------------------------------------------
# chromatic bounds
# ---------------------------------------------------------------------------

def greedy_clique_lower_bound(g: Graph) -> int:
    """Best clique found by greedy extension from high-degree seeds."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=g.degree, reverse=True)
    best = 1
    for s in order[:16]:
        size = 1
        cand = g.adj[s]
        while cand:
            pick, pick_d = -1, -1
            m = cand
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                d = (g.adj[v] & cand).bit_count()
                if d > pick_d:
                    pick, pick_d = v, d
            size += 1
            cand &= g.adj[pick]
        best = max(best, size)
    return best


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy coloring under the saturation rule (max saturation, then max
    degree among uncolored, then lowest index); each vertex gets the lowest
    feasible class.  Deterministic; class count is an upper bound on χ."""
    n = g.n
    if n == 0:
        return Coloring(np.empty(0, dtype=np.int32), 1)
    adj = g.adj
    assignment = np.full(n, -1, dtype=np.int32)
    sat_mask = [0] * n
    uncolored = (1 << n) - 1
    k_used = 0
    for _ in range(n):
        m = uncolored
        best_v, best_s, best_d = -1, -1, -1
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            s = sat_mask[v].bit_count()
            if s < best_s:
                continue
            d = (adj[v] & uncolored).bit_count()
            if s > best_s or d > best_d:
                best_v, best_s, best_d = v, s, d
        c = 0
        while (sat_mask[best_v] >> c) & 1:
            c += 1
        assignment[best_v] = c
        k_used = max(k_used, c + 1)
        uncolored ^= 1 << best_v
        m = adj[best_v]
        while m:
            b = m & -m
            m ^= b
            sat_mask[b.bit_length() - 1] |= 1 << c
    return Coloring(assignment, max(k_used, 1))


def chromatic_bounds(g: Graph, limits: SearchLimits | None = None) -> tuple[int, int]:
    """Bracket χ(G): greedy clique below, saturation-greedy coloring above,
    then close the gap by existence searches while the budget lasts.
    Returns lb = ub exactly when every decision search completed."""
    if g.n == 0:
        return (0, 0)
    limits = limits or SearchLimits()
    t0 = time.monotonic()
    deadline = t0 + limits.time_budget
    if g.m == 0:
        return (1, 1)
    lb = greedy_clique_lower_bound(g)
    ub = dsatur_coloring(g).k
    while lb < ub:
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            break
        res = count_colorings(
            g, lb,
            SearchLimits(time_budget=remaining, node_cap=limits.node_cap, value_cap=0),
        )
        if res.value > 0:
            return (lb, lb)
        if res.exact:
            lb += 1
        else:
            break
    return (lb, ub)
