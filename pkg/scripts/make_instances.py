#!/usr/bin/env python3
"""Regenerate the bundled DIMACS instances (queen boards, myciel family).

These files are reproducible from the structural builders; they are bundled
so the CLI works on paths out of the box and the .col writer has real
round-trip coverage.  Published random instances (DSJC*, le450_*) cannot be
rebuilt from their names — copy their original .col files into the same
directory to enable the corresponding stretch tests.
"""

from __future__ import annotations

import sys
from pathlib import Path

from colorclue.graph import write_dimacs
from colorclue.instances import myciel_graph, queen_graph


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "instances"
    out_dir.mkdir(parents=True, exist_ok=True)
    graphs = [myciel_graph(3), myciel_graph(4)]
    graphs += [queen_graph(n) for n in range(5, 10)]
    for g in graphs:
        path = out_dir / f"{g.name}.col"
        write_dimacs(g, path)
        print(f"{path}  n={g.n} m={g.m}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
