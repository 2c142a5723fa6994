#!/usr/bin/env python3
"""Survey random graphs for optimality clues at DSATUR's chromatic bound.

Generates a batch of G(n, d) graphs, runs the full sampling pipeline on
each at k = DSATUR's upper bound, and tallies the verdicts.  Any CLUE row
is re-checked by exact search for a (k-1)-coloring, separating true
positives (chi = k confirmed) from false positives — on sparse batches the
expected outcome is saturation everywhere with the occasional true
positive, and no false positives.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from colorclue.cdsatur import SearchLimits, count_colorings, dsatur_coloring
from colorclue.clue import VERDICT_CLUE, build_sample, evaluate_clue
from colorclue.graph import RandomGraphSpec, generate_random
from colorclue.head import SolverConfig
from colorclue.iscount import count_independent_sets


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=50, help="vertices per graph")
    parser.add_argument("--density", type=float, default=0.1, help="edge density")
    parser.add_argument("--count", type=int, default=20, help="graphs to survey")
    parser.add_argument("--seed", type=int, default=9000, help="base graph seed")
    parser.add_argument("--t", type=int, default=1000, help="sample size per graph")
    parser.add_argument("--workers", type=int, default=1, help="parallel solver runs")
    parser.add_argument("--run-budget", type=float, default=120.0,
                        help="sampling budget per graph (seconds)")
    args = parser.parse_args()

    verdicts: Counter[str] = Counter()
    false_positives = 0
    t_start = time.monotonic()
    for i in range(args.count):
        spec = RandomGraphSpec(args.n, args.density, args.seed + i)
        g = generate_random(spec)
        k = dsatur_coloring(g).k
        config = SolverConfig(k=k, seed=args.seed + args.count + i, time_budget=10.0)
        sample = build_sample(g, k, args.t, config,
                              run_budget=args.run_budget, workers=args.workers)
        report = evaluate_clue(g, k, sample, count_independent_sets(g))
        verdicts[report.verdict] += 1
        note = ""
        if report.verdict == VERDICT_CLUE:
            below = count_colorings(g, k - 1,
                                    limits=SearchLimits(value_cap=0, time_budget=60.0))
            if below.exact and below.value == 0:
                note = "  (true positive: chi = k confirmed)"
            else:
                note = "  (FALSE POSITIVE: a (k-1)-coloring exists)"
                false_positives += 1
        print(f"seed={args.seed + i} k={k} t={report.t} p={report.p} "
              f"{report.verdict}{note}")

    elapsed = time.monotonic() - t_start
    print(f"\n{args.count} graphs in {elapsed:.1f}s: {dict(verdicts)}")
    print(f"false positives: {false_positives}")
    return 1 if false_positives else 0


if __name__ == "__main__":
    raise SystemExit(main())
