"""Independent-set quantities: i(G), α(G), and analytic bounds/estimates.

``count_independent_sets`` enumerates every non-empty independent set by
ascending-vertex backtracking with neighbor-bitset pruning, stopping at a
configurable cap (a capped value is a lower bound — exactly what the clue
threshold needs).  ``alpha`` runs branch-and-bound maximum clique on the
complement.  The two closed-form companions are the 2^α + n − α lower bound
and the density-based first-moment estimate Σ_p C(n,p)(1−d)^C(p,2).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .cdsatur import (
    LIMIT_NONE,
    LIMIT_TIME,
    LIMIT_VALUE,
    SearchLimits,
    dsatur_coloring,
)
from .graph import Graph, bit_rows, complement

DEFAULT_IS_CAP = 10_000_000

#: Sentinel returned by ``pedersen_lower_bound`` when 2^alpha would dwarf any
#: realistic enumeration: the bound saturates at 2^62 and callers should
#: treat it as "astronomically many".
PEDERSEN_SATURATED = 1 << 62


@dataclass
class ISCount:
    """Result of counting non-empty independent sets (CountResult shape)."""

    value: int
    exact: bool
    limit_hit: str
    nodes: int
    elapsed: float
    cap: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "limit_hit": self.limit_hit,
            "nodes": self.nodes,
            "elapsed_s": self.elapsed,
            "cap": self.cap,
        }


def count_independent_sets(g: Graph, cap: int = DEFAULT_IS_CAP) -> ISCount:
    """Count non-empty independent sets of every size.

    Stops with ``exact=False`` once the running count reaches ``cap``; the
    capped value is a valid lower bound on i(G).  Work is proportional to
    the number of sets visited, so the cap also bounds the runtime.
    """
    if cap < 1:
        raise ValueError(f"need cap >= 1, got {cap}")
    t0 = time.monotonic()
    n = g.n
    if n == 0:
        return ISCount(0, True, LIMIT_NONE, 0, 0.0, cap)
    rows = bit_rows(g)
    W = rows.shape[1]
    cur = np.zeros((n + 1, W), dtype=np.uint64)
    for v in range(n):
        cur[0, v >> 6] |= np.uint64(1 << (v & 63))
    ctl = np.zeros(_kernels.CTL_SIZE, dtype=np.int64)
    ctl[_kernels.CTL_INIT] = 1
    chunk = 1 << 16
    exact = False
    limit_hit = LIMIT_NONE
    while True:
        status = _kernels.count_is_chunk(rows, cur, ctl, chunk, cap)
        if status == _kernels.DONE:
            exact = True
            break
        if status == _kernels.VALUE_CAPPED:
            limit_hit = LIMIT_VALUE
            break
        chunk = min(chunk << 1, 1 << 22)
    return ISCount(
        value=int(ctl[_kernels.CTL_COUNT]),
        exact=exact,
        limit_hit=limit_hit,
        nodes=int(ctl[_kernels.CTL_NODES]),
        elapsed=time.monotonic() - t0,
        cap=cap,
    )


def brute_force_is_count(g: Graph) -> int:
    """Count non-empty independent subsets by scanning all 2^n subsets
    (incremental check: S independent iff S minus its lowest vertex is
    independent and that vertex has no neighbor in the rest).  Oracle only;
    refuses n > 25."""
    if g.n > 25:
        raise ValueError(f"brute_force_is_count refuses n={g.n} > 25")
    n = g.n
    adj = g.adj
    total = 1 << n
    indep = bytearray(total)
    indep[0] = 1
    count = 0
    for s in range(1, total):
        b = s & -s
        rest = s ^ b
        if indep[rest] and not (adj[b.bit_length() - 1] & rest):
            indep[s] = 1
            count += 1
    return count


# ---------------------------------------------------------------------------
# maximum independent set (clique search on the complement)
# ---------------------------------------------------------------------------

def alpha(g: Graph, limits: SearchLimits | None = None) -> tuple[int, int]:
    """Bounds on α(G), equal when the branch-and-bound completes.

    Searches maximum clique in the complement with a greedy-coloring bound
    (classes of the candidate set bound the best extension).  On timeout the
    incumbent is the lower bound and the root coloring bound the upper.
    """
    limits = limits or SearchLimits()
    n = g.n
    if n == 0:
        return (0, 0)
    gc = complement(g)
    adj = gc.adj
    deadline = time.monotonic() + limits.time_budget
    full = (1 << n) - 1

    def color_sort(p: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        while p:
            color += 1
            q = p
            while q:
                b = q & -q
                v = b.bit_length() - 1
                p ^= b
                q &= ~adj[v] & p
                order.append(v)
                bounds.append(color)
        return order, bounds

    best = 0
    timed_out = False
    counter = [0]

    def expand(size: int, p: int) -> None:
        nonlocal best, timed_out
        if timed_out:
            return
        counter[0] += 1
        if counter[0] % 1024 == 0 and time.monotonic() >= deadline:
            timed_out = True
            return
        order, bounds = color_sort(p)
        cand = p
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            if size + 1 > best:
                best = size + 1
            nxt = cand & adj[v]
            if nxt:
                expand(size + 1, nxt)
                if timed_out:
                    return
            cand ^= 1 << v

    root_order, root_bounds = color_sort(full)
    root_ub = root_bounds[-1] if root_bounds else 0
    expand(0, full)
    if timed_out:
        return (best, max(best, root_ub))
    return (best, best)


# ---------------------------------------------------------------------------
# closed-form companions
# ---------------------------------------------------------------------------

def pedersen_lower_bound(n: int, alpha_value: int) -> int:
    """Lower bound on i(G): 2^alpha + n − alpha.

    Saturates to ``PEDERSEN_SATURATED`` for alpha > 62, where the bound
    exceeds any count an enumerator could certify anyway.  (The closed form
    counts the empty set among the 2^alpha subsets; against this package's
    non-empty i(G) convention it may overshoot by exactly 1 — callers that
    need a strict non-empty bound subtract it.)
    """
    if not 1 <= alpha_value <= n:
        raise ValueError(f"need 1 <= alpha <= n, got alpha={alpha_value}, n={n}")
    if alpha_value > 62:
        return PEDERSEN_SATURATED
    return (1 << alpha_value) + n - alpha_value


def bollobas_estimate(n: int, d: float) -> float:
    """First-moment estimate Σ_{p=1}^{n} C(n,p)·(1−d)^C(p,2) of the number
    of maximal independent sets in G(n,d); log-domain binomials keep the
    evaluation stable up to n ≈ 1000 (the value itself may overflow to inf
    for sparse graphs, which is the honest float answer)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"need 0 <= d <= 1, got {d}")
    if d == 1.0:
        return float(n)
    log1md = math.log1p(-d)
    logs = []
    for p in range(1, n + 1):
        lbinom = math.lgamma(n + 1) - math.lgamma(p + 1) - math.lgamma(n - p + 1)
        logs.append(lbinom + (p * (p - 1) // 2) * log1md)
    peak = max(logs)
    if math.isinf(peak):
        return math.inf
    total = sum(math.exp(x - peak) for x in logs)
    return math.exp(peak + math.log(total)) if peak + math.log(total) < 709 else math.inf


def iscount_report_json(g: Graph, result: ISCount, limits: SearchLimits | None = None) -> dict:
    """Bundle i(G) with α bounds and the analytic companions (CLI payload)."""
    from .graph import density as graph_density

    alpha_lb, alpha_ub = alpha(g, limits)
    d = graph_density(g) if g.n >= 2 else 0.0
    pedersen = pedersen_lower_bound(g.n, alpha_lb) if alpha_lb >= 1 else 0
    estimate = bollobas_estimate(g.n, d) if g.n >= 1 else 0.0
    return {
        "value": result.value,
        "exact": result.exact,
        "limit_hit": result.limit_hit,
        "nodes": result.nodes,
        "elapsed_s": result.elapsed,
        "cap": result.cap,
        "alpha_lb": alpha_lb,
        "alpha_ub": alpha_ub,
        "pedersen_lb": pedersen,
        # strict-JSON extended real: +inf (sparse overflow) becomes a string
        "bollobas_estimate": "+inf" if math.isinf(estimate) else estimate,
    }
