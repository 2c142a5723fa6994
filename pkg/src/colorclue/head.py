"""Memetic k-coloring search: a two-individual population alternating
partition crossover with tabu refinement.

Each generation crosses the current pair in both orders, improves both
children by tabu search, and keeps them as the next pair.  Two elite slots
remember the best coloring of recent generations; when the pair collapses
onto a single partition an elite takes one slot and the elite is reseeded,
and if every individual shares one partition the whole population restarts
from random.  The solver stops at the first legal coloring or when the
time/generation budget runs out.  Everything is deterministic given the
config seed.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import _kernels
from .coloring import UNCOLORED, Coloring, canonical_key, coloring_line
from .graph import Graph, csr_arrays

#: Generations between elite refreshes (elite1 <- best of window, elite2 <- old elite1).
ELITE_PERIOD = 10

STATUS_SOLVED = "solved"
STATUS_TIME = "exhausted_time"
STATUS_GENERATIONS = "exhausted_generations"


@dataclass(frozen=True)
class SolverConfig:
    k: int
    tabu_iterations: int = 20_000
    tenure_base: int = 9
    tenure_slope: float = 0.6
    max_generations: int = 100_000
    time_budget: float = 60.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"need k >= 1, got {self.k}")
        for field in ("tabu_iterations", "tenure_base", "max_generations"):
            if getattr(self, field) < 1:
                raise ValueError(f"{field} must be positive")
        if not self.time_budget > 0:
            raise ValueError("time_budget must be positive")
        if self.tenure_slope < 0:
            raise ValueError("tenure_slope must be nonnegative")

    def to_json(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_json(data: dict | str) -> "SolverConfig":
        if isinstance(data, str):
            data = json.loads(data)
        return SolverConfig(**data)


@dataclass
class SolverOutcome:
    status: str
    coloring: Coloring | None
    generations: int
    iterations_total: int
    elapsed: float
    best_conflicts: int


def outcome_to_json(outcome: SolverOutcome) -> dict:
    return {
        "status": outcome.status,
        "generations": outcome.generations,
        "iterations_total": outcome.iterations_total,
        "elapsed_s": outcome.elapsed,
        "best_conflicts": outcome.best_conflicts,
        "coloring": coloring_line(outcome.coloring) if outcome.coloring is not None else None,
    }


def random_coloring(g: Graph, k: int, rng: random.Random) -> Coloring:
    """Uniform class in 0..k-1 per vertex."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return Coloring(
        np.fromiter((rng.randrange(k) for _ in range(g.n)), dtype=np.int32, count=g.n),
        k,
    )


def tabu_search(
    g: Graph,
    start: Coloring,
    k: int,
    iterations: int,
    rng: random.Random,
    tenure_base: int = 9,
    tenure_slope: float = 0.6,
) -> Coloring:
    """Best coloring reached by single-vertex recolorings of conflicting
    vertices; never worse than ``start``.  A move away from (v, class) is
    tabu for uniform(0..tenure_base) + tenure_slope*conflicts iterations,
    overridden when a move beats the best seen so far."""
    if not start.is_complete():
        raise ValueError("tabu_search requires a complete starting coloring")
    if start.n != g.n:
        raise ValueError("coloring/graph size mismatch")
    if int(start.assignment.max(initial=0)) >= k:
        raise ValueError("start uses more than k classes")
    if g.n == 0:
        return start
    indptr, indices = csr_arrays(g)
    colors = start.assignment.astype(np.int32).copy()
    best = np.empty_like(colors)
    state = np.array([rng.getrandbits(64)], dtype=np.uint64)
    _kernels.tabu_search_kernel(
        indptr, indices, colors, k, iterations,
        tenure_base, tenure_slope, state, best,
    )
    return Coloring(best, k)


def gpx_crossover(p1: Coloring, p2: Coloring, k: int, rng: random.Random) -> Coloring:
    """Greedy partition crossover.

    k alternating steps: odd steps take the largest class still available in
    p1, even steps in p2 (ties to the lowest class label); the stolen
    vertices become the child's next class and disappear from both parents.
    Vertices left over after k steps get uniform random classes.
    """
    if p1.n != p2.n:
        raise ValueError(f"parent size mismatch: {p1.n} vs {p2.n}")
    if not (p1.is_complete() and p2.is_complete()):
        raise ValueError("gpx_crossover requires complete parents")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    n = p1.n
    child = np.full(n, UNCOLORED, dtype=np.int32)
    pools = (
        [set(cls) for cls in p1.classes()],
        [set(cls) for cls in p2.classes()],
    )
    for step in range(1, k + 1):
        pool = pools[0] if step % 2 == 1 else pools[1]
        if not pool:
            continue
        idx = max(range(len(pool)), key=lambda i: (len(pool[i]), -i))
        # Snapshot before mutating: ``pool[idx]`` is itself one of the sets
        # the in-place subtraction below drains.
        chosen = frozenset(pool[idx])
        if not chosen:
            continue
        for v in chosen:
            child[v] = step - 1
        for side in pools:
            for cls in side:
                cls -= chosen
    for v in range(n):
        if child[v] == UNCOLORED:
            child[v] = rng.randrange(k)
    return Coloring(child, k)


def head_solve(g: Graph, config: SolverConfig) -> SolverOutcome:
    """Run the two-individual memetic search until a legal coloring or
    budget exhaustion; see the module docstring for the population scheme."""
    t0 = time.monotonic()
    deadline = t0 + config.time_budget
    k = config.k
    n = g.n
    if n == 0:
        return SolverOutcome(STATUS_SOLVED, Coloring(np.empty(0, dtype=np.int32), k), 0, 0, 0.0, 0)
    rng = random.Random(config.seed)
    indptr, indices = csr_arrays(g)
    iterations_total = 0

    def fresh() -> np.ndarray:
        return np.fromiter((rng.randrange(k) for _ in range(n)), dtype=np.int32, count=n)

    def run_tabu(colors: np.ndarray) -> tuple[np.ndarray, int]:
        nonlocal iterations_total
        work = colors.copy()
        best = np.empty_like(work)
        state = np.array([rng.getrandbits(64)], dtype=np.uint64)
        bc, it = _kernels.tabu_search_kernel(
            indptr, indices, work, k, config.tabu_iterations,
            config.tenure_base, config.tenure_slope, state, best,
        )
        iterations_total += int(it)
        return best, int(bc)

    def key_of(arr: np.ndarray):
        return canonical_key(Coloring(arr, k))

    def solved(arr: np.ndarray, generations: int) -> SolverOutcome:
        return SolverOutcome(
            STATUS_SOLVED, Coloring(arr.copy(), k), generations,
            iterations_total, time.monotonic() - t0, 0,
        )

    cur: list[np.ndarray] = []
    cur_conf: list[int] = []
    for _ in range(2):
        arr, bc = run_tabu(fresh())
        if bc == 0:
            return solved(arr, 0)
        cur.append(arr)
        cur_conf.append(bc)

    order = 0 if cur_conf[0] <= cur_conf[1] else 1
    elite = [cur[order].copy(), cur[1 - order].copy()]
    elite_conf = [cur_conf[order], cur_conf[1 - order]]
    window: tuple[np.ndarray, int] | None = None
    best_conflicts = min(cur_conf)

    generations = 0
    status = STATUS_GENERATIONS
    while True:
        if time.monotonic() >= deadline:
            status = STATUS_TIME
            break
        if generations >= config.max_generations:
            status = STATUS_GENERATIONS
            break
        generations += 1

        parents = (Coloring(cur[0], k), Coloring(cur[1], k))
        for slot, (a, b) in enumerate(((0, 1), (1, 0))):
            child = gpx_crossover(parents[a], parents[b], k, rng)
            arr, bc = run_tabu(child.assignment)
            if bc == 0:
                return solved(arr, generations)
            cur[slot] = arr
            cur_conf[slot] = bc
            best_conflicts = min(best_conflicts, bc)
            if window is None or bc < window[1]:
                window = (arr.copy(), bc)

        if generations % ELITE_PERIOD == 0 and window is not None:
            elite[1] = elite[0]
            elite_conf[1] = elite_conf[0]
            elite[0], elite_conf[0] = window[0], window[1]
            window = None

        if key_of(cur[0]) == key_of(cur[1]):
            shared = key_of(cur[0])
            if key_of(elite[0]) != shared:
                cur[1] = elite[0].copy()
                cur_conf[1] = elite_conf[0]
                elite[0] = fresh()
                elite_conf[0] = n * n
            elif key_of(elite[1]) != shared:
                cur[1] = elite[1].copy()
                cur_conf[1] = elite_conf[1]
                elite[1] = fresh()
                elite_conf[1] = n * n
            else:
                # Whole population on one partition: restart from random.
                for slot in range(2):
                    arr, bc = run_tabu(fresh())
                    if bc == 0:
                        return solved(arr, generations)
                    cur[slot] = arr
                    cur_conf[slot] = bc
                elite = [fresh(), fresh()]
                elite_conf = [n * n, n * n]
                window = None
                best_conflicts = min(best_conflicts, *cur_conf)

    return SolverOutcome(
        status, None, generations, iterations_total,
        time.monotonic() - t0, best_conflicts,
    )
