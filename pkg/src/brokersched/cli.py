"""Command-line entry points: generate, run, experiment, oracle."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import pipeline, site_selection, transfer_scheduler
from .oracle import OracleSizeError, brute_force_oracle
from .workload import ScenarioFormatError, generate_scenario, load_scenario, save_scenario

_POLICIES = {
    "min-cost": site_selection.MIN_COST,
    "random-candidate": site_selection.RANDOM_CANDIDATE,
    "baseline": pipeline.BASELINE,
}

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_ORACLE_LIMIT = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brokersched",
        description="Broker-side job assignment and two-phase scheduling "
                    "across geo-distributed data centers")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a random scenario")
    gen.add_argument("--sites", type=int, required=True)
    gen.add_argument("--jobs", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)

    run = sub.add_parser("run", help="run one scenario and emit a CSV row")
    run.add_argument("--scenario", required=True)
    run.add_argument("--policy", choices=sorted(_POLICIES),
                     default="random-candidate")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--recompute", action="store_true")
    run.add_argument("--prune-metric",
                     choices=[transfer_scheduler.PRUNE_RAW,
                              transfer_scheduler.PRUNE_NORMALIZED],
                     default=transfer_scheduler.PRUNE_NORMALIZED)
    run.add_argument("--out", required=True)

    exp = sub.add_parser("experiment",
                         help="generate per-seed scenarios, compare against "
                              "the baseline, write a CSV")
    exp.add_argument("--sites", type=int, required=True)
    exp.add_argument("--jobs", type=int, required=True)
    exp.add_argument("--seeds", required=True,
                     help="comma-separated seed list")
    exp.add_argument("--policy", choices=["min-cost", "random-candidate"],
                     default="random-candidate")
    exp.add_argument("--out", required=True, help="output directory")

    orc = sub.add_parser("oracle",
                         help="brute-force optimum for a small scenario")
    orc.add_argument("--scenario", required=True)
    return parser


def _cmd_generate(args) -> int:
    scenario = generate_scenario(args.sites, args.jobs, seed=args.seed)
    save_scenario(scenario, args.out)
    print(f"wrote {args.out}: {args.sites} sites, {args.jobs} jobs, "
          f"seed {args.seed}")
    return EXIT_OK


def _cmd_run(args) -> int:
    scenario = load_scenario(args.scenario)
    if args.policy == "baseline":
        _, metrics = pipeline.run_baseline(scenario)
        norm_adm = norm_cost = 1.0
    else:
        _, metrics = pipeline.run_pipeline(
            scenario, policy=_POLICIES[args.policy], seed=args.seed,
            recompute=args.recompute, prune_metric=args.prune_metric)
        _, base = pipeline.run_baseline(scenario)
        norm_adm = pipeline._safe_ratio(metrics.admission_rate,
                                        base.admission_rate)
        norm_cost = pipeline._safe_ratio(metrics.total_cost, base.total_cost)
    text = pipeline.CSV_HEADER + "\n" + pipeline.csv_row(
        args.seed, args.policy, metrics, norm_adm, norm_cost) + "\n"
    pipeline.write_csv(text, args.out)
    print(f"admitted {metrics.admitted}/{metrics.total} "
          f"(rate {metrics.admission_rate:.3f}), "
          f"total cost {metrics.total_cost:.2f}; wrote {args.out}")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    seeds = [int(s) for s in args.seeds.split(",") if s.strip() != ""]
    if not seeds:
        raise ValueError("at least one seed is required")
    report = pipeline.run_experiment(args.sites, args.jobs, seeds,
                                     policy=_POLICIES[args.policy])
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / f"comparison_s{args.sites}_j{args.jobs}.csv"
    pipeline.write_csv(pipeline.report_to_csv(report), out_path)
    print(f"mean normalized admission {report.mean_norm_admission:.3f}, "
          f"mean normalized cost {report.mean_norm_cost:.3f}; "
          f"wrote {out_path}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    scenario = load_scenario(args.scenario)
    result = brute_force_oracle(scenario)
    if not result.feasible:
        print("infeasible: no assignment satisfies every subset constraint")
    else:
        placement = ",".join(str(s) for s in result.best_assignment)
        print(f"best cost {result.best_cost!r} with assignment [{placement}]")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"generate": _cmd_generate, "run": _cmd_run,
                "experiment": _cmd_experiment, "oracle": _cmd_oracle}
    try:
        return handlers[args.command](args)
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_LIMIT
    except (ScenarioFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
