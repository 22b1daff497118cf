"""Benchmark harness and command line interface.

Subcommands:

    run        one problem, N seeded replicates
    bench      all four ZDT problems with the same settings
    compare    render igd means beside published reference values
    plot-data  produced front + sampled true front as one plot-ready CSV

Each replicate writes `front_<problem>_<seed>.csv` (f1, f2, x1..x30) and
`trace_<problem>_<seed>.csv` (generation, igd, front_size); an invocation
additionally writes `summary.csv` (one row per replicate) and
`manifest.txt` (settings echo, version, derived seeds).  Replicate seeds
are base_seed + replicate index.  Floats are serialized with shortest
round-trip precision, so identical settings reproduce identical front and
trace files byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import __version__, zdt
from .engine import RunResult, run
from .evo import EvolutionParams
from .metrics import summarize
from .pareto import ParetoFront


class ConfigError(ValueError):
    """Invalid settings; the message lists the offending fields."""


# Best published igd means compared against (ZDT1..ZDT4):
# Cheng et al.'s HTL-MOPSO and Han et al.'s MOQPSO-DSCT.
CHENG_IGD = {"zdt1": 3.88e-3, "zdt2": 3.85e-3, "zdt3": 4.82e-3, "zdt4": 3.99e-3}
HAN_IGD = {"zdt1": 2.81e-3, "zdt2": 3.92e-3, "zdt3": 4.45e-3, "zdt4": 3.77e-3}


@dataclass
class RunConfig:
    """One benchmark invocation: which problem, how many replicates, where."""

    problem: str = "zdt1"
    params: EvolutionParams = field(default_factory=EvolutionParams)
    replicates: int = 50
    base_seed: int = 42
    output_dir: Path = Path("results")
    tf_points: int = 1000
    trace_every: int = 10
    workers: int | None = None  # None: one per available core

    def seeds(self) -> list[int]:
        return [self.base_seed + i for i in range(self.replicates)]

    def validate(self) -> None:
        bad = []
        if self.problem not in zdt.PROBLEMS:
            bad.append(f"problem must be one of {', '.join(zdt.PROBLEMS)}")
        if self.replicates < 1:
            bad.append("replicates must be >= 1")
        if self.tf_points < 2:
            bad.append("tf_points must be >= 2")
        if self.trace_every < 1:
            bad.append("trace_every must be >= 1")
        if self.workers is not None and self.workers < 1:
            bad.append("workers must be >= 1")
        try:
            self.params.validate()
        except ValueError as exc:
            bad.append(str(exc))
        if bad:
            raise ConfigError("; ".join(bad))


@dataclass(frozen=True)
class ReplicateRecord:
    """One summary.csv row."""

    problem: str
    seed: int
    final_igd: float
    front_size: int
    wall_time_s: float


def front_filename(problem: str, seed: int) -> str:
    return f"front_{problem}_{seed}.csv"


def trace_filename(problem: str, seed: int) -> str:
    return f"trace_{problem}_{seed}.csv"


def write_front_csv(path: Path, front: ParetoFront) -> None:
    genes = front.genomes.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["f1", "f2"] + [f"x{i}" for i in range(1, genes + 1)])
        for obj, genome in zip(front.objectives, front.genomes):
            writer.writerow([repr(float(v)) for v in (*obj, *genome)])


def write_trace_csv(path: Path, result: RunResult, trace_every: int) -> None:
    last = len(result.igd_trace) - 1
    rows = sorted({g for g in range(0, last + 1, trace_every)} | {0, last})
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["generation", "igd", "front_size"])
        for g in rows:
            writer.writerow(
                [g, repr(float(result.igd_trace[g])), int(result.front_sizes[g])]
            )


def _replicate_task(args: tuple) -> ReplicateRecord:
    problem, params, tf_points, trace_every, out_dir = args
    result = run(problem, params, tf_points=tf_points)
    write_front_csv(Path(out_dir) / front_filename(problem, params.seed), result.front)
    write_trace_csv(
        Path(out_dir) / trace_filename(problem, params.seed), result, trace_every
    )
    return ReplicateRecord(
        problem=problem,
        seed=params.seed,
        final_igd=result.final_igd,
        front_size=len(result.front),
        wall_time_s=result.elapsed_s,
    )


def write_manifest(path: Path, config: RunConfig, problems: list[str]) -> None:
    lines = [
        f"version = {__version__}",
        f"problems = {','.join(problems)}",
        f"replicates = {config.replicates}",
        f"base_seed = {config.base_seed}",
        f"seeds = {','.join(str(s) for s in config.seeds())}",
        f"output_dir = {config.output_dir}",
        f"tf_points = {config.tf_points}",
        f"trace_every = {config.trace_every}",
        f"workers = {'auto' if config.workers is None else config.workers}",
        f"solution_pop_size = {config.params.solution_pop_size}",
        f"objfn_pop_size = {config.params.objfn_pop_size}",
        f"generations = {config.params.generations}",
        f"tournament_size = {config.params.tournament_size}",
        f"crossover_rate = {config.params.crossover_rate!r}",
        f"mutation_prob = {config.params.mutation_prob!r}",
        f"elite_count = {config.params.elite_count}",
        f"archive_capacity = {config.params.archive_capacity}",
        f"novelty_k = {config.params.novelty_k}",
    ]
    path.write_text("\n".join(lines) + "\n")


def read_manifest(path: Path) -> dict[str, str]:
    out = {}
    for line in Path(path).read_text().splitlines():
        if " = " in line:
            key, value = line.split(" = ", 1)
            out[key] = value
    return out


def run_benchmark(
    config: RunConfig, problems: list[str] | None = None
) -> dict[str, tuple[float, float]]:
    """Run all replicates of all requested problems and persist everything.

    Returns {problem: (mean igd, sample stddev)} and prints one line per
    problem.  The output directory is prepared (and the manifest written)
    before any run starts, so an unwritable destination fails fast.
    """
    problems = [config.problem] if problems is None else list(problems)
    for p in problems:
        config = replace(config, problem=p)
        config.validate()
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_manifest(out_dir / "manifest.txt", config, problems)

    tasks = [
        (p, replace(config.params, seed=s), config.tf_points, config.trace_every, out_dir)
        for p in problems
        for s in config.seeds()
    ]
    workers = config.workers or os.cpu_count() or 1
    workers = min(workers, len(tasks))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_replicate_task, tasks))
    else:
        records = [_replicate_task(t) for t in tasks]

    with open(out_dir / "summary.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["problem", "seed", "final_igd", "front_size", "wall_time_s"])
        for r in records:
            writer.writerow(
                [r.problem, r.seed, repr(r.final_igd), r.front_size, repr(r.wall_time_s)]
            )

    summary = {}
    for p in problems:
        mean, std = summarize([r.final_igd for r in records if r.problem == p])
        summary[p] = (mean, std)
        print(f"{p}: igd mean {mean:.6E} stddev {std:.6E} ({config.replicates} replicates)")
    return summary


@dataclass(frozen=True)
class ComparisonRow:
    """One problem's igd means and who holds the row minimum (ties share)."""

    problem: str
    values: dict[str, float]  # keys: safe, cheng, han
    winners: frozenset[str]


def comparison_rows(safe_means: dict[str, float]) -> list[ComparisonRow]:
    rows = []
    for p in zdt.PROBLEMS:
        if p not in safe_means:
            continue
        values = {"safe": float(safe_means[p]), "cheng": CHENG_IGD[p], "han": HAN_IGD[p]}
        best = min(values.values())
        rows.append(
            ComparisonRow(p, values, frozenset(k for k, v in values.items() if v == best))
        )
    if not rows:
        raise ConfigError("no igd means supplied; nothing to compare")
    return rows


def format_comparison(safe_means: dict[str, float]) -> str:
    """Aligned table of igd means with each row's minimum in **bold**."""
    headers = {"safe": "SAFE", "cheng": "Cheng et al.", "han": "Han et al."}
    lines = [f"{'Problem':<8} {headers['safe']:>14} {headers['cheng']:>14} {headers['han']:>14}"]
    for row in comparison_rows(safe_means):
        cells = []
        for key in ("safe", "cheng", "han"):
            text = f"{row.values[key]:.2E}"
            if key in row.winners:
                text = f"**{text}**"
            cells.append(f"{text:>14}")
        lines.append(f"{row.problem:<8} " + " ".join(cells))
    return "\n".join(lines)


def emit_front_plot_data(
    front_objectives, problem: str, path: Path, tf_points: int = 1000
) -> None:
    """Write the produced front (sorted by f1) and the sampled true front as
    one long-format CSV with columns series, f1, f2."""
    front = np.atleast_2d(np.asarray(front_objectives, dtype=float))
    if front.size == 0:
        raise ValueError("cannot emit plot data for an empty front")
    front = front[np.argsort(front[:, 0], kind="stable")]
    tf = zdt.true_front(problem, tf_points)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["series", "f1", "f2"])
        for f1, f2 in front:
            writer.writerow(["produced", repr(float(f1)), repr(float(f2))])
        for f1, f2 in tf:
            writer.writerow(["true", repr(float(f1)), repr(float(f2))])


# --- argument parsing ----------------------------------------------------

_CONFIG_KEYS = (
    "problem",
    "replicates",
    "seed",
    "out",
    "generations",
    "pop_size",
    "objfn_pop_size",
    "tournament",
    "crossover_rate",
    "mutation_prob",
    "elites",
    "archive_capacity",
    "novelty_k",
    "tf_points",
    "trace_every",
    "workers",
)


def _add_run_flags(p: argparse.ArgumentParser, with_problem: bool) -> None:
    if with_problem:
        p.add_argument("--problem", choices=zdt.PROBLEMS)
    p.add_argument("--config", type=Path, help="JSON file with any of the flags below")
    p.add_argument("--replicates", type=int)
    p.add_argument("--seed", type=int, help="base seed; replicate i uses seed + i")
    p.add_argument("--out", type=Path, help="output directory")
    p.add_argument("--generations", type=int)
    p.add_argument("--pop-size", type=int, dest="pop_size")
    p.add_argument("--objfn-pop-size", type=int, dest="objfn_pop_size")
    p.add_argument("--tournament", type=int)
    p.add_argument("--crossover-rate", type=float, dest="crossover_rate")
    p.add_argument("--mutation-prob", type=float, dest="mutation_prob")
    p.add_argument("--elites", type=int)
    p.add_argument("--archive-capacity", type=int, dest="archive_capacity")
    p.add_argument("--novelty-k", type=int, dest="novelty_k")
    p.add_argument("--tf-points", type=int, dest="tf_points")
    p.add_argument("--trace-every", type=int, dest="trace_every")
    p.add_argument("--workers", type=int)


def build_config(args: argparse.Namespace) -> RunConfig:
    """Merge flag values over config-file values over defaults."""
    file_vals: dict = {}
    if getattr(args, "config", None) is not None:
        try:
            file_vals = json.loads(Path(args.config).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        unknown = sorted(set(file_vals) - set(_CONFIG_KEYS))
        if unknown:
            raise ConfigError(f"unknown config file keys: {', '.join(unknown)}")

    def pick(name, default):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        return file_vals.get(name, default)

    defaults = EvolutionParams()
    params = EvolutionParams(
        solution_pop_size=pick("pop_size", defaults.solution_pop_size),
        objfn_pop_size=pick("objfn_pop_size", defaults.objfn_pop_size),
        generations=pick("generations", defaults.generations),
        tournament_size=pick("tournament", defaults.tournament_size),
        crossover_rate=pick("crossover_rate", defaults.crossover_rate),
        mutation_prob=pick("mutation_prob", defaults.mutation_prob),
        elite_count=pick("elites", defaults.elite_count),
        archive_capacity=pick("archive_capacity", defaults.archive_capacity),
        novelty_k=pick("novelty_k", defaults.novelty_k),
    )
    return RunConfig(
        problem=pick("problem", "zdt1"),
        params=params,
        replicates=pick("replicates", 50),
        base_seed=pick("seed", 42),
        output_dir=Path(pick("out", "results")),
        tf_points=pick("tf_points", 1000),
        trace_every=pick("trace_every", 10),
        workers=pick("workers", None),
    )


def _cmd_run(args: argparse.Namespace) -> int:
    config = build_config(args)
    run_benchmark(config)
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    config = build_config(args)
    summary = run_benchmark(config, problems=list(zdt.PROBLEMS))
    print()
    print(format_comparison({p: mean for p, (mean, _) in summary.items()}))
    return 0


def _parse_mean(text: str) -> tuple[str, float]:
    try:
        problem, value = text.split("=", 1)
        return zdt.check_problem(problem.strip()), float(value)
    except ValueError as exc:
        raise ConfigError(f"--mean expects problem=value, got {text!r}") from exc


def _cmd_compare(args: argparse.Namespace) -> int:
    means: dict[str, float] = {}
    if args.summary is not None:
        per_problem: dict[str, list[float]] = {}
        with open(args.summary, newline="") as fh:
            for row in csv.DictReader(fh):
                per_problem.setdefault(row["problem"], []).append(float(row["final_igd"]))
        means = {p: summarize(v)[0] for p, v in per_problem.items()}
    for text in args.mean or []:
        problem, value = _parse_mean(text)
        means[problem] = value
    print(format_comparison(means))
    return 0


def _cmd_plot_data(args: argparse.Namespace) -> int:
    zdt.check_problem(args.problem)
    with open(args.front, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ConfigError(f"front file {args.front} has no data rows")
    front = np.array([[float(r["f1"]), float(r["f2"])] for r in rows])
    emit_front_plot_data(front, args.problem, args.out, tf_points=args.tf_points)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="safe-moo",
        description="Coevolve solutions and objective-function weightings on the ZDT benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="seeded replicate runs of one problem")
    _add_run_flags(p_run, with_problem=True)
    p_run.set_defaults(func=_cmd_run)

    p_bench = sub.add_parser("bench", help="replicate runs of all four problems")
    _add_run_flags(p_bench, with_problem=False)
    p_bench.set_defaults(func=_cmd_bench)

    p_cmp = sub.add_parser("compare", help="render igd means beside published values")
    p_cmp.add_argument("--summary", type=Path, help="summary.csv from run/bench")
    p_cmp.add_argument(
        "--mean",
        action="append",
        metavar="PROBLEM=VALUE",
        help="override or supply a mean directly (repeatable)",
    )
    p_cmp.set_defaults(func=_cmd_compare)

    p_plot = sub.add_parser("plot-data", help="front + true front as plot-ready CSV")
    p_plot.add_argument("--front", type=Path, required=True, help="front_*.csv to read")
    p_plot.add_argument("--problem", required=True, choices=zdt.PROBLEMS)
    p_plot.add_argument("--tf-points", type=int, dest="tf_points", default=1000)
    p_plot.add_argument("--out", type=Path, required=True)
    p_plot.set_defaults(func=_cmd_plot_data)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
