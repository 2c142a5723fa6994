"""Command-line front end: gen | count | iscount | clue | survey.

Every file output gets a ``<out>.manifest.json`` sidecar recording the
command, parameters, seeds, tool version, and timestamps, so any result can
be reproduced exactly (modulo timing fields).  Exit codes: 0 = completed
(verdicts are data, including INFEASIBLE), 2 = usage error, 3 = I/O or
parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import secrets
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .cdsatur import SearchLimits, chromatic_bounds, count_colorings, dsatur_coloring
from .clue import (
    DEFAULT_ALPHA_CONST,
    build_sample,
    clue_report_json,
    evaluate_clue,
)
from .graph import Graph, GraphFormatError, RandomGraphSpec, density, generate_random, write_dimacs
from .head import SolverConfig
from .instances import load_instance
from .iscount import DEFAULT_IS_CAP, count_independent_sets, iscount_report_json

DEFAULT_COUNT_BUDGET = 2400.0
DEFAULT_SAMPLE_T = 1000
DEFAULT_RUN_BUDGET = 60.0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a number in [0,1], got {text}")
    return value


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _resolve_seed(seed: int | None) -> int:
    return secrets.randbits(63) if seed is None else seed


def _json_bytes(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False)


def _emit(payload, out: str | None, manifest: dict) -> None:
    """Write JSON output to --out (with manifest sidecar) or stdout."""
    text = _json_bytes(payload)
    if out is None:
        print(text)
        return
    out_path = Path(out)
    out_path.write_text(text + "\n")
    sidecar = out_path.with_name(out_path.name + ".manifest.json")
    sidecar.write_text(_json_bytes(manifest) + "\n")


def _manifest(command: str, instance, params: dict, seeds: list[int], started: str) -> dict:
    return {
        "command": command,
        "instance": str(instance) if instance is not None else None,
        "params": params,
        "seeds": seeds,
        "tool_version": __version__,
        "started_at": started,
        "finished_at": _utcnow(),
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    started = _utcnow()
    seed = _resolve_seed(args.seed)
    seeds = [seed + i for i in range(args.count)]
    out = Path(args.out)
    written = []
    if args.count == 1:
        g = generate_random(RandomGraphSpec(args.n, args.d, seed))
        write_dimacs(g, out)
        written.append(str(out))
    else:
        out.mkdir(parents=True, exist_ok=True)
        for s in seeds:
            g = generate_random(RandomGraphSpec(args.n, args.d, s))
            path = out / f"rand-n{args.n}-d{args.d:g}-s{s}.col"
            write_dimacs(g, path)
            written.append(str(path))
    manifest = _manifest(
        "gen", None,
        {"n": args.n, "d": args.d, "count": args.count, "files": written},
        seeds, started,
    )
    sidecar = out.with_name(out.name + ".manifest.json") if args.count == 1 \
        else out / "batch.manifest.json"
    sidecar.write_text(_json_bytes(manifest) + "\n")
    print(f"wrote {len(written)} file(s)", file=sys.stderr)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    started = _utcnow()
    g = load_instance(args.instance)
    limits = SearchLimits(
        time_budget=args.time_budget,
        node_cap=args.node_cap,
        value_cap=args.value_cap,
    )
    result = count_colorings(g, args.k, limits)
    payload = {"instance": g.name or str(args.instance), "n": g.n, "k": args.k}
    payload.update(result.to_json())
    if args.bounds:
        lb, ub = chromatic_bounds(g, limits)
        payload["chromatic_lb"] = lb
        payload["chromatic_ub"] = ub
    manifest = _manifest(
        "count", args.instance,
        {"k": args.k, "time_budget": args.time_budget,
         "value_cap": args.value_cap, "node_cap": args.node_cap, "bounds": args.bounds},
        [], started,
    )
    _emit(payload, args.out, manifest)
    return 0


def cmd_iscount(args: argparse.Namespace) -> int:
    started = _utcnow()
    g = load_instance(args.instance)
    result = count_independent_sets(g, cap=args.is_cap)
    payload = {"instance": g.name or str(args.instance), "n": g.n}
    payload.update(iscount_report_json(g, result))
    manifest = _manifest("iscount", args.instance, {"is_cap": args.is_cap}, [], started)
    _emit(payload, args.out, manifest)
    return 0


def cmd_clue(args: argparse.Namespace) -> int:
    started = _utcnow()
    g = load_instance(args.instance)
    seed = _resolve_seed(args.seed)
    if args.solver_config:
        config = SolverConfig.from_json(Path(args.solver_config).read_text())
        config = SolverConfig(**{**config.to_json(), "k": args.k, "seed": seed})
    else:
        config = SolverConfig(
            k=args.k,
            tabu_iterations=args.tabu_iters,
            time_budget=args.run_budget,
            seed=seed,
        )
    sample = build_sample(
        g, args.k, args.t, config,
        run_budget=args.time_budget, workers=args.workers,
    )
    is_result = count_independent_sets(g, cap=args.is_cap)
    report = evaluate_clue(g, args.k, sample, is_result, alpha_const=args.alpha_const)
    payload = clue_report_json(g, report, sample, alpha_const=args.alpha_const,
                               instance=g.name or str(args.instance))
    manifest = _manifest(
        "clue", args.instance,
        {"k": args.k, "t": args.t, "workers": args.workers,
         "time_budget": args.time_budget, "run_budget": args.run_budget,
         "tabu_iters": args.tabu_iters, "is_cap": args.is_cap,
         "alpha_const": args.alpha_const},
        [seed], started,
    )
    _emit(payload, args.out, manifest)
    print(f"[clue] {payload['instance']}: verdict={report.verdict} "
          f"p={report.p} t={report.t}", file=sys.stderr)
    return 0


SURVEY_COLUMNS = [
    "instance", "n", "density", "chi_lb", "chi_ub", "k",
    "n_count", "n_exact", "is_count", "is_exact",
    "p", "t", "ub", "verdict", "error",
]


def _survey_row(g: Graph, label: str, args: argparse.Namespace, seed: int) -> dict:
    row = {c: "" for c in SURVEY_COLUMNS}
    row["instance"] = label
    row["n"] = g.n
    row["density"] = f"{density(g):.4f}" if g.n >= 2 else ""
    lb, ub = chromatic_bounds(g, SearchLimits(time_budget=args.time_budget))
    row["chi_lb"], row["chi_ub"] = lb, ub
    k = args.k if args.k_policy == "fixed" else ub
    row["k"] = k
    count = count_colorings(g, k, SearchLimits(time_budget=args.time_budget,
                                               value_cap=args.value_cap))
    row["n_count"], row["n_exact"] = count.value, count.exact
    is_result = count_independent_sets(g, cap=args.is_cap)
    row["is_count"], row["is_exact"] = is_result.value, is_result.exact
    config = SolverConfig(k=k, tabu_iterations=args.tabu_iters,
                          time_budget=args.run_budget, seed=seed)
    sample = build_sample(g, k, args.t, config,
                          run_budget=args.time_budget, workers=args.workers)
    report = evaluate_clue(g, k, sample, is_result, alpha_const=args.alpha_const)
    row["p"], row["t"] = report.p, report.t
    row["ub"] = "+inf" if math.isinf(report.ub) else f"{report.ub:.3f}"
    row["verdict"] = report.verdict
    return row


def cmd_survey(args: argparse.Namespace) -> int:
    started = _utcnow()
    seed = _resolve_seed(args.seed)
    jobs: list[tuple[str, Graph | Path]] = []
    if args.dir is not None:
        for path in sorted(Path(args.dir).glob("*.col")):
            jobs.append((path.stem, path))
    else:
        n, d, count = args.batch
        for i in range(count):
            spec = RandomGraphSpec(n, d, seed + i)
            jobs.append((f"rand-n{n}-d{d:g}-s{seed + i}", generate_random(spec)))

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SURVEY_COLUMNS)
    writer.writeheader()
    for label, item in jobs:
        try:
            g = item if isinstance(item, Graph) else load_instance(item)
            row = _survey_row(g, label, args, seed)
        except Exception as exc:  # per-instance failures land in the row
            row = {c: "" for c in SURVEY_COLUMNS}
            row["instance"] = label
            row["error"] = f"{type(exc).__name__}: {exc}"
        writer.writerow(row)
        print(f"[survey] {label}: {row.get('verdict') or row.get('error')}",
              file=sys.stderr)

    text = buffer.getvalue()
    manifest = _manifest(
        "survey", args.dir or f"batch:{args.batch}",
        {"k_policy": args.k_policy, "k": args.k, "t": args.t,
         "time_budget": args.time_budget, "value_cap": args.value_cap,
         "is_cap": args.is_cap, "workers": args.workers},
        [seed], started,
    )
    if args.out is None:
        sys.stdout.write(text)
    else:
        out_path = Path(args.out)
        out_path.write_text(text)
        sidecar = out_path.with_name(out_path.name + ".manifest.json")
        sidecar.write_text(_json_bytes(manifest) + "\n")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _batch_spec(text: str) -> tuple[int, float, int]:
    try:
        n, d, count = text.split(",")
        return (int(n), float(d), int(count))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected n,d,count (e.g. 30,0.9,20), got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorclue",
        description="Graph-coloring optimality clues: sampling, counting, verdicts.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write G(n,d) DIMACS instances")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--d", type=_probability, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=_positive_int, default=1,
                   help="batch size; >1 writes into --out as a directory")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="count k-colorings (partition semantics)")
    p.add_argument("instance")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--time-budget", type=_positive_float, default=DEFAULT_COUNT_BUDGET)
    p.add_argument("--value-cap", type=_nonneg_int, default=None)
    p.add_argument("--node-cap", type=_positive_int, default=None)
    p.add_argument("--bounds", action="store_true", help="also report chromatic bounds")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("iscount", help="count non-empty independent sets")
    p.add_argument("instance")
    p.add_argument("--is-cap", type=_positive_int, default=DEFAULT_IS_CAP)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_iscount)

    p = sub.add_parser("clue", help="sample k-colorings and report the clue verdict")
    p.add_argument("instance")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--t", type=_positive_int, default=DEFAULT_SAMPLE_T)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--time-budget", type=_positive_float, default=None,
                   help="total sampling budget in seconds (default: unlimited attempts cap)")
    p.add_argument("--run-budget", type=_positive_float, default=DEFAULT_RUN_BUDGET,
                   help="per-run solver budget in seconds")
    p.add_argument("--tabu-iters", type=_positive_int, default=20_000)
    p.add_argument("--is-cap", type=_positive_int, default=DEFAULT_IS_CAP)
    p.add_argument("--alpha-const", type=_positive_float, default=DEFAULT_ALPHA_CONST)
    p.add_argument("--solver-config", default=None,
                   help="JSON file with SolverConfig fields (k/seed overridden by flags)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_clue)

    p = sub.add_parser("survey", help="one CSV row per instance: bounds, counts, verdict")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dir", default=None, help="directory of .col files")
    src.add_argument("--batch", type=_batch_spec, default=None,
                     help="n,d,count random batch (seeds seed..seed+count-1)")
    p.add_argument("--k-policy", choices=("chi", "fixed"), default="chi",
                   help="k per instance: resolved chromatic upper bound, or --k")
    p.add_argument("--k", type=_positive_int, default=None)
    p.add_argument("--t", type=_positive_int, default=DEFAULT_SAMPLE_T)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--time-budget", type=_positive_float, default=60.0,
                   help="per-instance budget for each counting/sampling stage")
    p.add_argument("--run-budget", type=_positive_float, default=10.0)
    p.add_argument("--tabu-iters", type=_positive_int, default=20_000)
    p.add_argument("--value-cap", type=_nonneg_int, default=1_000_000)
    p.add_argument("--is-cap", type=_positive_int, default=DEFAULT_IS_CAP)
    p.add_argument("--alpha-const", type=_positive_float, default=DEFAULT_ALPHA_CONST)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "survey" and args.k_policy == "fixed" and args.k is None:
        parser.error("--k-policy fixed requires --k")
    try:
        return args.func(args)
    except (GraphFormatError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
