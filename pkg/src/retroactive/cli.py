"""Command line entry point: ``retroactive verify | bench | reduce``."""

from __future__ import annotations

import argparse
import csv
import sys

from .bench import CSV_HEADER, BenchConfig, fit_slopes, record_row, run_bench, summary_path, write_summary
from .engine import STRATEGIES, Retroactive
from .errors import RetroError
from .hard import circuit_counter_adt, minplus_multiplier_adt, three_summer_adt
from .instances import PROBLEMS, load_instance
from .reductions import iter_online_minplus_retro, solve_3sum_retro, solve_circuitsat_retro
from .verify import SUITES, VerifyConfig, run_suites


def cmd_verify(config: VerifyConfig, out=None) -> int:
    out = out or sys.stdout
    results = run_suites(config, emit=lambda line: print(line, file=out))
    ok = all(r.ok for r in results)
    print("verify: " + ("all suites passed" if ok else "FAILED"), file=out)
    return 0 if ok else 1


def cmd_bench(config: BenchConfig, out=None) -> int:
    out = out or sys.stdout
    with open(config.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)

        def sink(record):
            writer.writerow(record_row(record))
            fh.flush()
            print(
                f"{record.problem} n={record.n} m={record.m} {record.strategy}: "
                f"{record.total_base_ops} base ops, {record.retro_ops} retro ops, "
                f"{record.wall_ns / 1e6:.1f} ms, answer_ok={record.answer_ok}",
                file=out,
            )

        records = run_bench(config, sink)
    slopes = fit_slopes(records)
    write_summary(slopes, summary_path(config.out))
    for problem, strategy, slope in slopes:
        print(f"slope {problem} {strategy}: {slope:.3f}", file=out)
    return 0 if all(r.answer_ok for r in records) else 1


def cmd_reduce(problem: str, path: str, strategy: str, out=None) -> int:
    out = out or sys.stdout
    with open(path) as fh:
        instance = load_instance(problem, fh.read())
    if problem == "circuitsat":
        answer = solve_circuitsat_retro(instance, Retroactive(circuit_counter_adt(), strategy))
        print("SAT" if answer else "UNSAT", file=out)
    elif problem == "minplus":
        wrapper = Retroactive(minplus_multiplier_adt(), strategy)
        for product in iter_online_minplus_retro(instance.matrix, instance.vectors, wrapper):
            print(" ".join(str(x) for x in product), file=out, flush=True)
    else:
        answer = solve_3sum_retro(instance, Retroactive(three_summer_adt(), strategy))
        print("TRIPLE" if answer else "NONE", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="retroactive", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the differential verification suites")
    verify.add_argument("--problem", choices=("all",) + SUITES, default="all")
    verify.add_argument("--seeds", type=int, default=VerifyConfig.seeds, help="instances per reduction suite")
    verify.add_argument("--scripts", type=int, default=VerifyConfig.scripts, help="random scripts per wrapper suite")
    verify.add_argument("--strategy", choices=("all",) + STRATEGIES, default="all")

    bench = sub.add_parser("bench", help="sweep sizes and write a CSV of operation counts")
    bench.add_argument("--problem", choices=("all",) + PROBLEMS, default="all")
    bench.add_argument("--sizes", type=int, nargs="+")
    bench.add_argument("--seeds", type=int, default=1, help="seeds 0..N-1 per size")
    bench.add_argument("--strategy", choices=("all",) + STRATEGIES, default="all")
    bench.add_argument("--out", default="bench.csv")
    bench.add_argument("--planted", action="store_true")

    reduce = sub.add_parser("reduce", help="solve one instance file through a retroactive wrapper")
    reduce.add_argument("--problem", choices=PROBLEMS, required=True)
    reduce.add_argument("instance")
    reduce.add_argument("--strategy", choices=STRATEGIES, default=STRATEGIES[1])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    strategies = STRATEGIES if getattr(args, "strategy", "all") == "all" else (args.strategy,)
    try:
        if args.command == "verify":
            problems = SUITES if args.problem == "all" else (args.problem,)
            return cmd_verify(VerifyConfig(problems, args.seeds, args.scripts, strategies=strategies))
        if args.command == "bench":
            problems = PROBLEMS if args.problem == "all" else (args.problem,)
            sizes = tuple(args.sizes) if args.sizes else None
            return cmd_bench(BenchConfig(problems, sizes, args.seeds, strategies, args.out, args.planted))
        return cmd_reduce(args.problem, args.instance, args.strategy)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RetroError as exc:
        where = f"{args.instance}: " if args.command == "reduce" else ""
        print(f"error: {where}{exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
