"""Command-line front end: gen, bound, find, check, bench.

Single runs emit a JSON report (or a flat one-row CSV with --format csv);
bench emits a CSV table. Exit codes: 0 success, 2 parse or precondition
error, 3 cap exceeded. Every random choice flows from --seed through the
documented derivation rule, and the seed is echoed in the report so runs
replay exactly; without --seed a fresh entropy seed is drawn and printed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from fractions import Fraction
from typing import Any

from .bounds import weight_value
from .cascade import ThresholdConfig, parse_seed_set, simulate
from .exact import SearchSpaceError, min_contagious_exact, solve_dense
from .graph import (
    Graph,
    GraphError,
    GraphSpec,
    build_graph_spec,
    parse_edge_list,
    serialize_edge_list,
)
from .greedy import greedy_contagious
from .random_perm import randomized_contagious
from .reports import ContagiousSetReport, fraction_dict
from .rng import derive_seed, fresh_entropy_seed
from .warmup_k2 import WarmupParams, iterated_random_k2, random_2dom_baseline

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP_EXCEEDED = 3

ALGORITHMS = ("greedy", "random", "exact", "k2iter", "k2base")


class CliError(Exception):
    """User-facing error; rendered to stderr with the given exit code."""

    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _threshold(k: int) -> ThresholdConfig:
    try:
        return ThresholdConfig(k)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _load_graph(path: str, num_vertices: int | None) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read graph file {path}: {exc}") from exc
    try:
        return parse_edge_list(text, num_vertices=num_vertices)
    except GraphError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _graph_summary(g: Graph) -> dict[str, int]:
    return {"n": g.n, "m": g.m, "min_degree": g.min_degree(), "max_degree": g.max_degree()}


def _base_report(args_echo: list[str], g: Graph, k: int | None) -> dict[str, Any]:
    report: dict[str, Any] = {"command": "contagion " + " ".join(args_echo)}
    report["graph"] = _graph_summary(g)
    if k is not None:
        report["k"] = k
    return report


def _emit(report: dict[str, Any], fmt: str, output: str | None) -> None:
    if fmt == "json":
        text = json.dumps(report, indent=2, default=str) + "\n"
    else:
        flat = _flatten(report)
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
        text = buf.getvalue()
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flatten(obj: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, name + "."))
        elif isinstance(value, list):
            out[name] = " ".join(str(v) for v in value)
        else:
            out[name] = value
    return out


def _spec_from_args(args: argparse.Namespace) -> GraphSpec:
    fam = args.family
    params: dict[str, Any]
    if fam == "disjoint-cliques":
        params = {"q": args.q, "l": args.l}
    elif fam == "cycle":
        params = {"n": args.n}
    elif fam == "grid":
        params = {"rows": args.rows, "cols": args.cols}
    elif fam == "gnp":
        params = {"n": args.n, "p": args.p}
    elif fam == "random-regular":
        params = {"n": args.n, "d": args.d}
    else:
        raise CliError(f"unknown family {fam!r}")
    missing = [key for key, value in params.items() if value is None]
    if missing:
        raise CliError(f"family {fam!r} needs --{' --'.join(missing)}")
    return GraphSpec(family=fam, params=params, seed=args.seed)


def cmd_gen(args: argparse.Namespace, argv: list[str]) -> int:
    if args.family in ("gnp", "random-regular") and args.seed is None:
        args.seed = fresh_entropy_seed()
        print(f"# seed {args.seed}", file=sys.stderr)
    spec = _spec_from_args(args)
    try:
        g = build_graph_spec(spec)
    except GraphError as exc:
        raise CliError(str(exc)) from exc
    text = serialize_edge_list(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"n={g.n} m={g.m}", file=sys.stderr)
    return EXIT_OK


def cmd_bound(args: argparse.Namespace, argv: list[str]) -> int:
    g = _load_graph(args.graph, args.num_vertices)
    cfg = _threshold(args.k)
    start = time.perf_counter()
    w = weight_value(g, cfg)
    elapsed = time.perf_counter() - start
    report = _base_report(argv, g, args.k)
    report["w"] = fraction_dict(w)
    report["w_floor"] = math.floor(w)
    report["wall_time_s"] = elapsed
    _emit(report, args.format, args.output)
    return EXIT_OK


def _finish_find_report(
    report: dict[str, Any], cs: ContagiousSetReport, elapsed: float
) -> dict[str, Any]:
    report["algorithm"] = cs.algorithm
    report["w"] = fraction_dict(cs.w)
    report["w_floor"] = math.floor(cs.w)
    report["set"] = cs.set
    report["size"] = cs.size
    report["verified"] = cs.verified
    report["certificate"] = cs.certificate
    report["wall_time_s"] = elapsed
    return report


def cmd_find(args: argparse.Namespace, argv: list[str]) -> int:
    g = _load_graph(args.graph, args.num_vertices)
    cfg = _threshold(args.k)
    if args.algo in ("k2iter", "k2base") and args.k != 2:
        raise CliError(f"--algo {args.algo} requires --k 2, got k={args.k}")
    seed = args.seed if args.seed is not None else fresh_entropy_seed()
    report = _base_report(argv, g, args.k)
    report["seed"] = seed

    start = time.perf_counter()
    if args.algo == "greedy":
        cs = greedy_contagious(g, cfg)
    elif args.algo == "random":
        cs = randomized_contagious(g, cfg, seed, max_trials=args.max_trials)
        report["trials"] = cs.certificate["trials_run"]
    elif args.algo == "exact":
        cap = args.cap if args.cap is not None else math.floor(weight_value(g, cfg))
        try:
            result = min_contagious_exact(g, cfg, cap, allow_large=args.allow_large)
        except SearchSpaceError as exc:
            raise CliError(str(exc)) from exc
        elapsed = time.perf_counter() - start
        report["algorithm"] = "exact"
        report["w"] = fraction_dict(weight_value(g, cfg))
        report["w_floor"] = math.floor(weight_value(g, cfg))
        report["cap"] = result.cap
        report["subsets_tested"] = result.subsets_tested
        report["wall_time_s"] = elapsed
        if result.cap_exceeded:
            report["set"] = None
            report["size"] = None
            report["verified"] = False
            report["cap_exceeded"] = True
            _emit(report, args.format, args.output)
            return EXIT_CAP_EXCEEDED
        report["set"] = result.optimum_set
        report["size"] = result.optimum_size
        report["verified"] = True
        report["cap_exceeded"] = False
        _emit(report, args.format, args.output)
        return EXIT_OK
    elif args.algo == "k2iter":
        cs = iterated_random_k2(g, WarmupParams(seed=seed))
    elif args.algo == "k2base":
        try:
            cs = random_2dom_baseline(g, seed)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    else:
        raise CliError(f"unknown algorithm {args.algo!r}")
    elapsed = time.perf_counter() - start
    _finish_find_report(report, cs, elapsed)
    _emit(report, args.format, args.output)
    return EXIT_OK


def cmd_check(args: argparse.Namespace, argv: list[str]) -> int:
    g = _load_graph(args.graph, args.num_vertices)
    cfg = _threshold(args.k)
    try:
        with open(args.seeds, "r", encoding="utf-8") as fh:
            seeds = parse_seed_set(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read seed file {args.seeds}: {exc}") from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if any(s >= g.n for s in seeds):
        raise CliError(f"seed id {max(seeds)} out of range for n={g.n}")
    start = time.perf_counter()
    result = simulate(g, cfg, seeds)
    elapsed = time.perf_counter() - start
    report = _base_report(argv, g, args.k)
    report["seeds"] = sorted(set(seeds))
    report["contagious"] = result.fully_activated
    report["activated_count"] = result.activated_count
    report["rounds"] = result.rounds.tolist()
    report["wall_time_s"] = elapsed
    _emit(report, args.format, args.output)
    return EXIT_OK


def _bench_single(
    g: Graph, k: int, algo: str, seed: int, max_trials: int
) -> tuple[int, Fraction]:
    cfg = ThresholdConfig(k)
    if algo == "greedy":
        cs = greedy_contagious(g, cfg)
    elif algo == "random":
        cs = randomized_contagious(g, cfg, seed, max_trials=max_trials)
    elif algo == "exact":
        result = solve_dense(g, cfg)
        return result.optimum_size, weight_value(g, cfg)
    elif algo == "k2iter":
        cs = iterated_random_k2(g, WarmupParams(seed=seed))
    elif algo == "k2base":
        cs = random_2dom_baseline(g, seed)
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    return cs.size, cs.w


def cmd_bench(args: argparse.Namespace, argv: list[str]) -> int:
    try:
        with open(args.suite, "r", encoding="utf-8") as fh:
            suite = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot load suite {args.suite}: {exc}") from exc
    master = suite.get("master_seed", 0)
    rows = []
    for run_idx, run in enumerate(suite.get("runs", [])):
        family = run["family"]
        params = run.get("params", {})
        k = run["k"]
        reps = run.get("repetitions", 1)
        for algo in run.get("algos", ["greedy"]):
            for rep in range(reps):
                seed = derive_seed(master, run_idx, rep)
                row: dict[str, Any] = {
                    "family": family,
                    "n": "",
                    "m": "",
                    "k": k,
                    "algo": algo,
                    "rep": rep,
                    "size": "",
                    "w": "",
                    "ratio": "",
                    "seed": seed,
                    "error": "",
                    "wall_time_s": "",
                }
                try:
                    g = build_graph_spec(GraphSpec(family=family, params=params, seed=seed))
                    row["n"], row["m"] = g.n, g.m
                    start = time.perf_counter()
                    size, w = _bench_single(g, k, algo, seed, args.max_trials)
                    row["wall_time_s"] = f"{time.perf_counter() - start:.6f}"
                    row["size"] = size
                    row["w"] = float(w)
                    row["ratio"] = size / float(w) if w else ""
                except Exception as exc:  # keep the suite going, record the failure
                    row["error"] = f"{type(exc).__name__}: {exc}"
                rows.append(row)
    fieldnames = [
        "family", "n", "m", "k", "algo", "rep", "size", "w", "ratio", "seed", "error",
        "wall_time_s",
    ]
    out = args.output
    handle = open(out, "w", encoding="utf-8", newline="") if out else sys.stdout
    try:
        writer = csv.DictWriter(handle, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out:
            handle.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contagion",
        description="k-threshold cascades: bounds, contagious sets, verification, benchmarks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write its edge list")
    gen.add_argument("--family", required=True,
                     choices=["disjoint-cliques", "cycle", "grid", "gnp", "random-regular"])
    gen.add_argument("--q", type=int, help="clique count (disjoint-cliques)")
    gen.add_argument("--l", type=int, help="clique size (disjoint-cliques)")
    gen.add_argument("--n", type=int, help="vertex count (cycle, gnp, random-regular)")
    gen.add_argument("--rows", type=int, help="grid rows")
    gen.add_argument("--cols", type=int, help="grid columns")
    gen.add_argument("--p", type=float, help="edge probability (gnp)")
    gen.add_argument("--d", type=int, help="degree (random-regular)")
    gen.add_argument("--seed", type=int, help="generator seed")
    gen.add_argument("--output", "-o", help="edge-list file (stdout if omitted)")

    common: list[tuple[str, dict[str, Any]]] = [
        ("--k", {"type": int, "required": True, "help": "activation threshold"}),
        ("--num-vertices", {"type": int, "help": "override n for edge lists with isolated tail vertices"}),
        ("--format", {"choices": ["json", "csv"], "default": "json"}),
        ("--output", {"help": "report file (stdout if omitted)"}),
    ]

    bound = sub.add_parser("bound", help="compute the degree-sequence weight bound")
    bound.add_argument("graph", help="edge-list file")
    for flag, kw in common:
        bound.add_argument(flag, **kw)

    find = sub.add_parser("find", help="find a contagious set")
    find.add_argument("graph", help="edge-list file")
    find.add_argument("--algo", required=True, choices=list(ALGORITHMS))
    find.add_argument("--seed", type=int, help="master seed (random algorithms)")
    find.add_argument("--max-trials", type=int, default=1000,
                      help="trial cap for --algo random (also restart cap for k2iter)")
    find.add_argument("--cap", type=int, help="size cap for --algo exact (default floor w)")
    find.add_argument("--allow-large", action="store_true",
                      help="override the exact-search subset budget")
    for flag, kw in common:
        find.add_argument(flag, **kw)

    check = sub.add_parser("check", help="check whether a seed set is contagious")
    check.add_argument("graph", help="edge-list file")
    check.add_argument("--seeds", required=True, help="seed file: one vertex id per line")
    for flag, kw in common:
        check.add_argument(flag, **kw)

    bench = sub.add_parser("bench", help="run a benchmark suite to CSV")
    bench.add_argument("suite", help="suite JSON file")
    bench.add_argument("--output", "-o", help="CSV file (stdout if omitted)")
    bench.add_argument("--max-trials", type=int, default=1000)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    handlers = {
        "gen": cmd_gen,
        "bound": cmd_bound,
        "find": cmd_find,
        "check": cmd_check,
        "bench": cmd_bench,
    }
    try:
        return handlers[args.command](args, argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    raise SystemExit(main())
