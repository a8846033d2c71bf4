"""Benchmark sweeps: run each reduction driver, count base updates, cross-check answers."""

from __future__ import annotations

import csv
import math
import statistics
import time
from dataclasses import astuple, dataclass, fields
from itertools import groupby

from .engine import STRATEGIES, Retroactive
from .hard import circuit_counter_adt, minplus_multiplier_adt, three_summer_adt
from .instances import PROBLEMS, check_cap, generate_instance
from .reductions import (
    THREESUM_BRUTEFORCE_CAP,
    solve_3sum_bruteforce,
    solve_3sum_retro,
    solve_3sum_sorted,
    solve_circuitsat_bruteforce,
    solve_circuitsat_retro,
    solve_online_minplus_naive,
    solve_online_minplus_retro,
    timeline_length,
)

DEFAULT_SIZES = {
    "circuitsat": (4, 6, 8, 10, 12),
    "minplus": (8, 16, 32, 64),
    "3sum": (64, 256, 1024, 4096),
}


@dataclass
class RunRecord:
    problem: str
    n: int
    m: int
    strategy: str
    total_base_ops: int
    retro_ops: int
    wall_ns: int
    answer_ok: bool


CSV_HEADER = [f.name for f in fields(RunRecord)]


@dataclass
class BenchConfig:
    problems: tuple = PROBLEMS
    sizes: tuple | None = None
    seeds: int = 1
    strategies: tuple = STRATEGIES
    out: str = "bench.csv"
    planted: bool = False

    def sizes_for(self, problem):
        sizes = self.sizes or DEFAULT_SIZES[problem]
        for n in sizes:
            check_cap(problem, n)
        return sizes


def _threesum_oracle(instance):
    if instance.n <= THREESUM_BRUTEFORCE_CAP:
        return solve_3sum_bruteforce(instance)
    return solve_3sum_sorted(instance)


_DRIVERS = {
    "circuitsat": (circuit_counter_adt, solve_circuitsat_retro, solve_circuitsat_bruteforce),
    "minplus": (minplus_multiplier_adt, solve_online_minplus_retro, solve_online_minplus_naive),
    "3sum": (three_summer_adt, solve_3sum_retro, _threesum_oracle),
}


def run_cell(problem: str, n: int, seed: int, strategy: str, planted: bool = False) -> RunRecord:
    make_adt, driver, oracle = _DRIVERS[problem]
    instance = generate_instance(problem, n, seed, planted)
    wrapper = Retroactive(make_adt(), strategy)
    start = time.perf_counter_ns()
    answer = driver(instance, wrapper)
    wall = time.perf_counter_ns() - start
    return RunRecord(
        problem=problem,
        n=n,
        m=timeline_length(problem, n),
        strategy=strategy,
        total_base_ops=wrapper.base_op_count(),
        retro_ops=wrapper.retro_op_count,
        wall_ns=wall,
        answer_ok=answer == oracle(instance),
    )


def run_bench(config: BenchConfig, sink=None) -> list:
    records = []
    for problem in config.problems:
        for n in config.sizes_for(problem):
            for seed in range(config.seeds):
                for strategy in config.strategies:
                    record = run_cell(problem, n, seed, strategy, config.planted)
                    records.append(record)
                    if sink is not None:
                        sink(record)
    return records


def loglog_slope(points) -> float:
    """Least-squares slope of log(y) against log(x)."""
    xs = [math.log(x) for x, _ in points]
    ys = [math.log(y) for _, y in points]
    return statistics.linear_regression(xs, ys).slope


def fit_slopes(records) -> list:
    """One ``(problem, strategy, slope)`` per group with at least two distinct m."""
    out = []
    key = lambda r: (r.problem, r.strategy)
    for (problem, strategy), group in groupby(sorted(records, key=key), key=key):
        by_m = {}
        for r in group:
            by_m.setdefault(r.m, []).append(r.total_base_ops)
        if len(by_m) < 2:
            continue
        points = [(m, statistics.fmean(ops)) for m, ops in sorted(by_m.items())]
        out.append((problem, strategy, loglog_slope(points)))
    return out


def record_row(record: RunRecord) -> list:
    row = list(astuple(record))
    row[-1] = "true" if record.answer_ok else "false"
    return row


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(record_row(r))


def read_csv(path) -> list:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            RunRecord(
                problem=row["problem"],
                n=int(row["n"]),
                m=int(row["m"]),
                strategy=row["strategy"],
                total_base_ops=int(row["total_base_ops"]),
                retro_ops=int(row["retro_ops"]),
                wall_ns=int(row["wall_ns"]),
                answer_ok=row["answer_ok"] == "true",
            )
            for row in reader
        ]


def summary_path(out: str) -> str:
    stem = out[:-4] if out.endswith(".csv") else out
    return stem + ".summary.csv"


def write_summary(slopes, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["problem", "strategy", "loglog_slope_base_ops_vs_m"])
        for problem, strategy, slope in slopes:
            writer.writerow([problem, strategy, f"{slope:.4f}"])
