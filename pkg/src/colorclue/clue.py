"""Optimality-clue engine: sampling, the count estimator, and the verdict.

The pipeline asks whether the legal k-colorings found by the memetic solver
are likely optimal without proving χ(G): sample t legal k-colorings, count
the p distinct partitions among them, extrapolate an upper bound on the
total number of k-colorings from (p, t), and compare it against the
independent-set threshold i(G) − k.  A count of k-colorings strictly below
i(G) − k certifies k = χ(G) (recoloring any independent set inside a legal
k-coloring yields distinct (k+1)-colorings, so abundant independent sets
force abundant colorings one level up — scarcity at k therefore pins the
optimum).  Since both i(G) and the sampled bound may be estimates, the
verdict is a *clue*, not a proof.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from ._kernels import mix64
from .cdsatur import SearchLimits, count_colorings
from .coloring import CanonicalKey, Coloring, canonical_key, conflicts
from .graph import Graph, density
from .head import STATUS_SOLVED, SolverConfig, head_solve
from .iscount import ISCount, count_independent_sets

DEFAULT_ALPHA_CONST = 1.01
SATURATION_FRACTION = 0.99  # p < 0.99 t, exact integer comparison

VERDICT_CLUE = "CLUE"
VERDICT_UB_TOO_HIGH = "NO_CLUE_UB_TOO_HIGH"
VERDICT_SATURATED = "NO_CLUE_SAMPLE_SATURATED"
VERDICT_FEW_IS = "NO_CLUE_FEW_INDEPENDENT_SETS"
VERDICT_INFEASIBLE = "INFEASIBLE"

_MASK64 = (1 << 64) - 1


@dataclass
class Sample:
    """t successful solver runs collapsed to a multiset of partition keys."""

    k: int
    t: int
    keys: Counter  # CanonicalKey -> occurrences, summing to t
    per_run_elapsed: list[float] = field(default_factory=list)
    seeds: list[int] = field(default_factory=list)
    attempts: int = 0
    elapsed_total: float = 0.0

    @property
    def p(self) -> int:
        return len(self.keys)


@dataclass
class ClueReport:
    verdict: str
    k: int
    t: int
    p: int
    ub: float  # +inf when the sample saturates
    is_count: ISCount
    threshold: int  # is_count.value - k (i lower bound minus k)
    elapsed_total: float


def run_seed(base_seed: int, index: int) -> int:
    """Seed for run ``index``: base XOR a bit-mixed index, so streams are
    decorrelated and any run can be reproduced in isolation."""
    return (base_seed & _MASK64) ^ mix64(index)


# Worker-process state for build_sample (set once per worker by the pool
# initializer; read-only afterwards).
_POOL_GRAPH: Graph | None = None
_POOL_CONFIG: SolverConfig | None = None


def _pool_init(g: Graph, config: SolverConfig) -> None:
    global _POOL_GRAPH, _POOL_CONFIG
    _POOL_GRAPH = g
    _POOL_CONFIG = config


def _pool_run(task: tuple[int, int]) -> tuple[int, int, bool, CanonicalKey | None, float]:
    index, seed = task
    outcome = head_solve(_POOL_GRAPH, replace(_POOL_CONFIG, seed=seed))
    key = canonical_key(outcome.coloring) if outcome.status == STATUS_SOLVED else None
    return (index, seed, outcome.status == STATUS_SOLVED, key, outcome.elapsed)


def build_sample(
    g: Graph,
    k: int,
    t_target: int,
    config: SolverConfig,
    run_budget: float | None = None,
    workers: int = 1,
) -> Sample:
    """Collect ``t_target`` legal k-colorings from independent solver runs.

    Run ``i`` uses ``run_seed(config.seed, i)``; runs are consumed in index
    order and the sample keeps the first ``t_target`` successes of the
    resolved index prefix, so the key multiset does not depend on the worker
    count.  Stops early when ``run_budget`` (wall seconds) runs out — or,
    with no budget, after ``50 * t_target`` attempts — possibly returning a
    short or empty sample (t=0 drives the INFEASIBLE verdict downstream).
    """
    if t_target < 1:
        raise ValueError(f"need t_target >= 1, got {t_target}")
    if workers < 1:
        raise ValueError(f"need workers >= 1, got {workers}")
    config = replace(config, k=k)
    t0 = time.monotonic()
    deadline = None if run_budget is None else t0 + run_budget
    max_attempts = 50 * t_target if run_budget is None else None

    successes: list[tuple[int, int, CanonicalKey, float]] = []
    attempts = 0
    next_index = 0

    def out_of_budget() -> bool:
        if deadline is not None and time.monotonic() >= deadline:
            return True
        if max_attempts is not None and attempts >= max_attempts:
            return True
        return False

    if workers == 1:
        while len(successes) < t_target and not out_of_budget():
            index = next_index
            next_index += 1
            seed = run_seed(config.seed, index)
            outcome = head_solve(g, replace(config, seed=seed))
            attempts += 1
            if outcome.status == STATUS_SOLVED:
                successes.append((index, seed, canonical_key(outcome.coloring), outcome.elapsed))
    else:
        wave = max(2 * workers, 4)
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_pool_init, initargs=(g, config)
        ) as pool:
            while len(successes) < t_target and not out_of_budget():
                tasks = [(i, run_seed(config.seed, i)) for i in range(next_index, next_index + wave)]
                next_index += wave
                for index, seed, ok, key, elapsed in pool.map(_pool_run, tasks):
                    attempts += 1
                    if ok:
                        successes.append((index, seed, key, elapsed))

    successes.sort(key=lambda item: item[0])
    chosen = successes[:t_target]
    keys = Counter(key for _, _, key, _ in chosen)
    # Safety net on the sample invariant: every key must decode to a legal
    # k-coloring (keys are themselves assignments after relabeling).
    for key in keys:
        if conflicts(g, Coloring.from_sequence(key, k)) != 0:
            raise AssertionError("sampled key decodes to an illegal coloring")
    return Sample(
        k=k,
        t=len(chosen),
        keys=keys,
        per_run_elapsed=[e for _, _, _, e in chosen],
        seeds=[s for _, s, _, _ in chosen],
        attempts=attempts,
        elapsed_total=time.monotonic() - t0,
    )


def ub_estimate(p: int, t: int, alpha_const: float = DEFAULT_ALPHA_CONST) -> float:
    """Extrapolated upper bound on the number of distinct solutions from a
    sample with p distinct among t draws: p + p^(alpha*(t+p)/t), or +inf
    once p reaches 99% of t (too few repeats to extrapolate).  The 99%
    cutoff is evaluated in exact integer arithmetic (100p < 99t)."""
    if p < 1 or p > t:
        raise ValueError(f"need 1 <= p <= t, got p={p}, t={t}")
    if not 100 * p < 99 * t:
        return math.inf
    return p + p ** (alpha_const * (t + p) / t)


def round_half_up(x: float) -> float:
    """Display rounding for report tables; decisions always use raw values."""
    if math.isinf(x):
        return x
    return math.floor(x + 0.5)


def collision_probability(n_solutions: int, t: int, exact: bool = False) -> float:
    """Probability that t independent uniform draws from ``n_solutions``
    distinct values contain a repeat.  Default is the birthday-bound
    exponential approximation 1 − exp(−t(t−1)/2N); ``exact=True`` computes
    the exact falling-factorial product (cross-check variant, N ≤ 10^6 and
    t ≤ 10^4)."""
    if n_solutions < 1:
        raise ValueError(f"need a positive solution count, got {n_solutions}")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if exact:
        if n_solutions > 10**6 or t > 10**4:
            raise ValueError("exact form supported for N <= 1e6 and t <= 1e4")
        if t > n_solutions:
            return 1.0
        log_no_collision = sum(math.log1p(-j / n_solutions) for j in range(t))
        return 1.0 - math.exp(log_no_collision)
    return 1.0 - math.exp(-t * (t - 1) / (2.0 * n_solutions))


def evaluate_clue(
    g: Graph,
    k: int,
    sample: Sample,
    is_result: ISCount,
    alpha_const: float = DEFAULT_ALPHA_CONST,
) -> ClueReport:
    """Five-step verdict over a sample and an IS count of the same graph.

    1. no successful runs → INFEASIBLE;
    2. p ≥ 0.99 t → NO_CLUE_SAMPLE_SATURATED (estimator diverges);
    3. finite estimate below i_lb − k → CLUE (valid with a capped IS count,
       which is a lower bound);
    4. otherwise, an *exact* IS count not exceeding p means the threshold
       can never clear (there are at least p ≥ i − k solutions) →
       NO_CLUE_FEW_INDEPENDENT_SETS;
    5. otherwise → NO_CLUE_UB_TOO_HIGH.

    Decisions use the unrounded estimate.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    t, p = sample.t, sample.p
    threshold = is_result.value - k
    elapsed = sample.elapsed_total + is_result.elapsed
    if t == 0:
        return ClueReport(VERDICT_INFEASIBLE, k, 0, 0, math.inf, is_result, threshold, elapsed)
    if not 100 * p < 99 * t:
        return ClueReport(VERDICT_SATURATED, k, t, p, math.inf, is_result, threshold, elapsed)
    ub = ub_estimate(p, t, alpha_const)
    if threshold > ub:
        verdict = VERDICT_CLUE
    elif is_result.exact and is_result.value <= p:
        verdict = VERDICT_FEW_IS
    else:
        verdict = VERDICT_UB_TOO_HIGH
    return ClueReport(verdict, k, t, p, ub, is_result, threshold, elapsed)


def clue_report_json(
    g: Graph,
    report: ClueReport,
    sample: Sample,
    alpha_const: float = DEFAULT_ALPHA_CONST,
    instance: str | None = None,
) -> dict:
    """Machine-readable report row; infinite bounds serialize as "+inf"."""

    def ext(x: float):
        return "+inf" if math.isinf(x) else x

    return {
        "instance": instance or g.name or f"graph-n{g.n}-m{g.m}",
        "n": g.n,
        "density": density(g) if g.n >= 2 else None,
        "k": report.k,
        "t": report.t,
        "p": report.p,
        "ub": ext(report.ub),
        "ub_rounded": ext(round_half_up(report.ub)) if not math.isinf(report.ub) else "+inf",
        "alpha_const": alpha_const,
        "is_count": report.is_count.value,
        "is_exact": report.is_count.exact,
        "threshold": report.threshold,
        "verdict": report.verdict,
        "elapsed_total_s": report.elapsed_total,
        "per_run_elapsed_s": sample.per_run_elapsed,
        "seeds": sample.seeds,
    }


def recoloring_bound_diagnostic(g: Graph, k: int, limits: SearchLimits | None = None) -> dict:
    """Check the recoloring inequality N(G,k+1) ≥ i(G) − k + 1 on a small
    graph where everything is exactly computable.

    The inequality underpins the clue threshold, but the recolor-an-IS map
    behind it is not injective in degenerate cases (two isolated vertices
    at k=1 give i=3 yet only two 2-partitions), so this runs as a recorded
    diagnostic rather than trusted logic.
    """
    limits = limits or SearchLimits(time_budget=60.0)
    n_k = count_colorings(g, k, limits)
    if not n_k.exact:
        return {"applicable": False, "reason": "N(G,k) not exact within limits"}
    if n_k.value == 0:
        return {"applicable": False, "reason": "no k-coloring exists", "n_k": 0}
    is_res = count_independent_sets(g)
    n_k1 = count_colorings(g, k + 1, limits)
    if not (is_res.exact and n_k1.exact):
        return {"applicable": False, "reason": "counts not exact within limits"}
    bound = is_res.value - k + 1
    return {
        "applicable": True,
        "holds": n_k1.value >= bound,
        "k": k,
        "n_k": n_k.value,
        "n_k_plus_1": n_k1.value,
        "is_count": is_res.value,
        "bound": bound,
    }
