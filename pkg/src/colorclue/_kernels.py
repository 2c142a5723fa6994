"""Compiled inner loops: tabu search, coloring-partition counting, IS counting.

Everything here is deliberately low-level.  Graphs arrive as CSR arrays
(``indptr``/``indices``) and/or packed 64-bit adjacency rows; colorings are
``int32`` arrays.  The counting kernels are *resumable*: all search state
lives in caller-owned arrays, the kernel runs for a bounded number of nodes
and returns a status code, and the caller re-invokes it until done.  That
keeps wall-clock budgeting in Python (where ``time`` is cheap) without
sacrificing throughput.

Randomness uses splitmix64 with the state held in a ``uint64[1]`` array so
Python and compiled code can share one deterministic stream.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# Search status codes shared by the resumable kernels.
RUN_MORE = 0
DONE = 1
VALUE_CAPPED = 2
NODE_CAPPED = 3

_MASK64 = (1 << 64) - 1

# De Bruijn multiply table for index-of-lowest-bit on 64-bit words.
_DB_MULT = np.uint64(0x03F79D71B4CB0A89)
_DB_TABLE = np.zeros(64, dtype=np.int64)
for _i in range(64):
    _DB_TABLE[(((1 << _i) * 0x03F79D71B4CB0A89) & _MASK64) >> 58] = _i
del _i


# ---------------------------------------------------------------------------
# splitmix64
# ---------------------------------------------------------------------------

def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step on a Python int state; returns (new_state, draw)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, (z ^ (z >> 31)) & _MASK64


def mix64(x: int) -> int:
    """One-shot splitmix64 output for ``x``; used to derive per-run seeds."""
    return splitmix64(x)[1]


@njit(cache=True, inline="always")
def _next_u64(state):
    state[0] += np.uint64(0x9E3779B97F4A7C15)
    z = state[0]
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@njit(cache=True, inline="always")
def _rand_below(state, n):
    return np.int64(_next_u64(state) % np.uint64(n))


@njit(cache=True)
def splitmix64_stream(state, out):
    """Fill ``out`` with consecutive draws (test hook for stream parity)."""
    for i in range(out.shape[0]):
        out[i] = _next_u64(state)


# ---------------------------------------------------------------------------
# bit helpers on packed uint64 rows
# ---------------------------------------------------------------------------

@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True, inline="always")
def _bit_index(b):
    return _DB_TABLE[np.int64((b * _DB_MULT) >> np.uint64(58))]


@njit(cache=True, inline="always")
def _set_bit(words, v):
    words[v >> 6] |= np.uint64(1) << np.uint64(v & 63)


@njit(cache=True, inline="always")
def _clear_bit(words, v):
    words[v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))


# ---------------------------------------------------------------------------
# tabu search (one-move neighborhood over conflicting vertices)
# ---------------------------------------------------------------------------

@njit(cache=True)
def tabu_search_kernel(indptr, indices, colors, k, max_iters,
                       tenure_base, tenure_slope, state, best_colors):
    """Minimise monochromatic edges by single-vertex recolorings.

    ``colors`` is mutated in place (final state); the best coloring seen is
    copied into ``best_colors``.  A move re-assigning vertex ``v`` away from
    class ``c`` makes the reverse pair ``(v, c)`` tabu for
    ``uniform(0..tenure_base) + tenure_slope * current_conflicts``
    iterations, with aspiration for moves that beat the best-so-far.
    Returns ``(best_conflict_count, iterations_used)``.
    """
    n = colors.shape[0]
    gamma = np.zeros((n, k), dtype=np.int32)
    for v in range(n):
        for j in range(indptr[v], indptr[v + 1]):
            gamma[v, colors[indices[j]]] += 1
    conflicts = 0
    for v in range(n):
        conflicts += gamma[v, colors[v]]
    conflicts //= 2

    best = conflicts
    for v in range(n):
        best_colors[v] = colors[v]
    if conflicts == 0:
        return 0, 0
    if k == 1:
        # No alternative class exists; the start is already locally optimal.
        return best, 0

    tabu_until = np.full((n, k), np.int64(-1), dtype=np.int64)
    it = 0
    while it < max_iters:
        it += 1
        best_delta = np.int64(1) << np.int64(40)
        cand_v = np.int64(-1)
        cand_c = np.int64(-1)
        ties = 0
        for v in range(n):
            cv = colors[v]
            if gamma[v, cv] == 0:
                continue
            for c in range(k):
                if c == cv:
                    continue
                delta = np.int64(gamma[v, c]) - np.int64(gamma[v, cv])
                if tabu_until[v, c] >= it and conflicts + delta >= best:
                    continue
                if delta < best_delta:
                    best_delta = delta
                    cand_v = v
                    cand_c = c
                    ties = 1
                elif delta == best_delta:
                    ties += 1
                    if _rand_below(state, ties) == 0:
                        cand_v = v
                        cand_c = c
        if cand_v < 0:
            # Every move is tabu and none aspirates: random conflicting
            # vertex, random different class.
            nconf = 0
            for v in range(n):
                if gamma[v, colors[v]] > 0:
                    nconf += 1
            pick = _rand_below(state, nconf)
            for v in range(n):
                if gamma[v, colors[v]] > 0:
                    if pick == 0:
                        cand_v = v
                        break
                    pick -= 1
            cand_c = _rand_below(state, k - 1)
            if cand_c >= colors[cand_v]:
                cand_c += 1
            best_delta = np.int64(gamma[cand_v, cand_c]) - np.int64(gamma[cand_v, colors[cand_v]])

        old = colors[cand_v]
        tenure = _rand_below(state, tenure_base + 1) + np.int64(tenure_slope * conflicts)
        tabu_until[cand_v, old] = it + tenure
        colors[cand_v] = cand_c
        conflicts += best_delta
        for j in range(indptr[cand_v], indptr[cand_v + 1]):
            u = indices[j]
            gamma[u, old] -= 1
            gamma[u, cand_c] += 1
        if conflicts < best:
            best = conflicts
            for v in range(n):
                best_colors[v] = colors[v]
            if best == 0:
                break
    return best, it


# ---------------------------------------------------------------------------
# partition counting (saturation-guided backtracking)
# ---------------------------------------------------------------------------

# ctl layout shared by the resumable kernels
CTL_INIT = 0
CTL_DEPTH = 1
CTL_COUNT = 2
CTL_NODES = 3
CTL_SIZE = 4


@njit(cache=True)
def _select_vertex(adjbits, uncolored, sat_mask, W):
    """Uncolored vertex maximising (saturation, degree-to-uncolored); lowest
    index wins ties.  Returns -1 when everything is colored."""
    best_v = np.int64(-1)
    best_s = np.int64(-1)
    best_d = np.int64(-1)
    for w in range(W):
        word = uncolored[w]
        while word != np.uint64(0):
            b = word & (~word + np.uint64(1))
            word ^= b
            v = (w << 6) + _bit_index(b)
            s = _popcount(sat_mask[v])
            if s < best_s:
                continue
            d = np.int64(0)
            for ww in range(W):
                d += _popcount(adjbits[v, ww] & uncolored[ww])
            if s > best_s or d > best_d:
                best_v = v
                best_s = s
                best_d = d
    return best_v


@njit(cache=True)
def count_colorings_chunk(adjbits, indptr, indices, k, sel, cc, used,
                          sat_count, sat_mask, uncolored, ctl,
                          chunk_nodes, value_cap, node_cap):
    """Run the partition-counting search for at most ``chunk_nodes`` nodes.

    Branches assign the selected vertex to each feasible existing class and
    to at most one fresh class, so each partition into <= k independent sets
    is produced exactly once.  ``value_cap``/``node_cap`` use -1 for "none";
    the count stops once value exceeds ``value_cap`` or nodes reach
    ``node_cap``.  Returns a status code; all state persists in the arrays.
    """
    n = sel.shape[0]
    W = adjbits.shape[1]
    if ctl[CTL_INIT] == 0:
        ctl[CTL_INIT] = 1
        ctl[CTL_DEPTH] = 0
        v0 = _select_vertex(adjbits, uncolored, sat_mask, W)
        sel[0] = v0
        cc[0] = -1
        used[0] = 0
        _clear_bit(uncolored, v0)

    depth = ctl[CTL_DEPTH]
    count = ctl[CTL_COUNT]
    nodes = ctl[CTL_NODES]
    nodes_stop = nodes + chunk_nodes
    status = RUN_MORE
    while True:
        if depth < 0:
            status = DONE
            break
        if nodes >= nodes_stop:
            status = RUN_MORE
            break
        v = sel[depth]
        c = np.int64(cc[depth])
        if c >= 0:
            for j in range(indptr[v], indptr[v + 1]):
                u = indices[j]
                sat_count[u, c] -= 1
                if sat_count[u, c] == 0:
                    sat_mask[u] &= ~(np.uint64(1) << np.uint64(c))
        limit = np.int64(used[depth])
        if limit > k - 1:
            limit = k - 1
        nc = np.int64(-1)
        cq = c + 1
        while cq <= limit:
            if (sat_mask[v] >> np.uint64(cq)) & np.uint64(1) == np.uint64(0):
                nc = cq
                break
            cq += 1
        if nc < 0:
            _set_bit(uncolored, v)
            depth -= 1
            continue
        cc[depth] = nc
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            sat_count[u, nc] += 1
            if sat_count[u, nc] == 1:
                sat_mask[u] |= np.uint64(1) << np.uint64(nc)
        nodes += 1
        if depth == n - 1:
            count += 1
            if value_cap >= 0 and count > value_cap:
                status = VALUE_CAPPED
                break
        if node_cap >= 0 and nodes >= node_cap:
            status = NODE_CAPPED
            break
        if depth < n - 1:
            ndepth = depth + 1
            used[ndepth] = used[depth] if nc < used[depth] else nc + 1
            w = _select_vertex(adjbits, uncolored, sat_mask, W)
            sel[ndepth] = w
            cc[ndepth] = -1
            _clear_bit(uncolored, w)
            depth = ndepth
    ctl[CTL_DEPTH] = depth
    ctl[CTL_COUNT] = count
    ctl[CTL_NODES] = nodes
    return status


# ---------------------------------------------------------------------------
# independent-set counting (ascending-order subtree enumeration)
# ---------------------------------------------------------------------------

@njit(cache=True)
def count_is_chunk(adjbits, cur, ctl, chunk_nodes, cap):
    """Count non-empty independent sets, at most ``chunk_nodes`` per call.

    ``cur[d]`` holds the candidate vertices (all larger than everything on
    the current chain) still to be tried at depth ``d``; popping ascending
    lowest bits enumerates every independent set exactly once.  Stops with
    VALUE_CAPPED as soon as the count reaches ``cap`` (-1 for none).
    """
    W = adjbits.shape[1]
    depth = ctl[CTL_DEPTH]
    count = ctl[CTL_COUNT]
    nodes = ctl[CTL_NODES]
    nodes_stop = nodes + chunk_nodes
    status = RUN_MORE
    while True:
        if depth < 0:
            status = DONE
            break
        if nodes >= nodes_stop:
            status = RUN_MORE
            break
        v = np.int64(-1)
        for w in range(W):
            word = cur[depth, w]
            if word != np.uint64(0):
                b = word & (~word + np.uint64(1))
                cur[depth, w] = word ^ b
                v = (w << 6) + _bit_index(b)
                break
        if v < 0:
            depth -= 1
            continue
        count += 1
        nodes += 1
        if cap >= 0 and count >= cap:
            status = VALUE_CAPPED
            break
        nonzero = False
        for w in range(W):
            x = cur[depth, w] & ~adjbits[v, w]
            cur[depth + 1, w] = x
            if x != np.uint64(0):
                nonzero = True
        if nonzero:
            depth += 1
    ctl[CTL_DEPTH] = depth
    ctl[CTL_COUNT] = count
    ctl[CTL_NODES] = nodes
    return status
