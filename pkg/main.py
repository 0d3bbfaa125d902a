#!/usr/bin/env python3
"""
Co-NOMA Hybrid VLC/RF Optimizer - Main Entry Point

Commands:
    solve   Sample one scenario and print (or write) a JSON solve report
    sweep   Run a Monte-Carlo sweep and write CSV/JSON plot data
    oracle  Compare co-noma against exhaustive search on small scenarios

Usage:
    python main.py solve --seed 7 --methods co-noma,noma
    python main.py sweep --axis fov --values 30,50,70,90 --trials 500 --out results/fov
    python main.py oracle --trials 200 --out results/oracle.json

Exit codes: 0 success, 2 configuration error, 3 results I/O error,
1 any other failure.
"""

import argparse
import json
import math
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

# Add project root to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from simulation import (
    SweepConfig,
    SweepSimulation,
    jain_index,
    print_activity_log,
    print_performance,
    print_sweep_table,
    trial_seed,
    write_results,
)
from simulation.sweep import AXES, METHOD_NAMES
from src.channel.scenario import sample_scenario
from src.solvers import Method, build_instance, solve, solve_with_fairness
from src.utils.config import AppConfig, load_config
from src.utils.errors import CoNomaError, ConfigError, ResultsIOError, exit_code_for
from src.utils.logger import configure_logging, get_logger


def _csv_floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"--values must be a comma-separated list of numbers: {text}") from exc


def _csv_methods(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in methods if m not in METHOD_NAMES]
    if unknown:
        raise ConfigError("unknown methods", methods=unknown, known=list(METHOD_NAMES))
    return methods


def _seed(value: Optional[int], default: int) -> int:
    seed = default if value is None else value
    if not 0 <= seed < 2**64:
        raise ConfigError("--seed must be an unsigned 64-bit integer", seed=seed)
    return seed


def _with_shadowing(config: AppConfig, shadowing: Optional[str]) -> AppConfig:
    if shadowing is None:
        return config
    rf = replace(config.rf, shadowing=shadowing == "on")
    config.rf = rf
    config.scenario = replace(config.scenario, rf=rf)
    return config


def _write_json(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        print(text, end="")
        return
    try:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ResultsIOError(f"cannot write report: {exc}", path=out) from exc


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all sub-commands."""
    parser = argparse.ArgumentParser(
        description="Co-NOMA hybrid VLC/RF downlink optimizer",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", type=str, help="YAML config (default: $CONOMA_CONFIG or config/settings.yaml)")
        p.add_argument("--seed", type=int, help="Master RNG seed (unsigned 64-bit)")
        p.add_argument("--out", type=str, help="Output path")
        p.add_argument("--shadowing", choices=["on", "off"], help="Log-normal RF shadowing")

    p_solve = sub.add_parser("solve", help="Solve one sampled scenario")
    common(p_solve)
    p_solve.add_argument("--methods", type=str, default="co-noma", help="Comma-separated methods")
    p_solve.add_argument("--fairness", action="store_true", help="Run the fairness weight loop")

    p_sweep = sub.add_parser("sweep", help="Monte-Carlo sweep")
    common(p_sweep)
    p_sweep.add_argument("--axis", choices=list(AXES), help="Swept parameter")
    p_sweep.add_argument("--values", type=str, help="Comma-separated axis values")
    p_sweep.add_argument("--trials", type=int, help="Trials per axis value")
    p_sweep.add_argument("--methods", type=str, help="Comma-separated methods")
    p_sweep.add_argument("--workers", type=int, help="Worker processes")

    p_oracle = sub.add_parser("oracle", help="Compare co-noma with exhaustive search")
    common(p_oracle)
    p_oracle.add_argument("--trials", type=int, default=200, help="Scenarios to compare")

    return parser


def run_solve(args, config: AppConfig) -> None:
    seed = _seed(args.seed, config.sweep.seed)
    scenario, channels = sample_scenario(config.scenario, seed)
    instance = build_instance(channels, config.phy, scenario.rf)

    reports = {}
    for method in _csv_methods(args.methods):
        if args.fairness:
            report, _ = solve_with_fairness(method, instance, config.solver)
        else:
            report = solve(method, instance, options=config.solver)
        entry = report.to_dict(instance)
        entry["jain_index"] = jain_index(report.user_rates(instance))
        reports[method] = entry

    _write_json(
        {
            "seed": seed,
            "users": [
                {"id": uid, "position": list(u.position), "blocked": u.blocked, "virtual": u.virtual}
                for uid, u in enumerate(scenario.users)
            ],
            "strong": list(instance.strong),
            "weak": list(instance.weak),
            "reports": reports,
        },
        args.out,
    )


def run_sweep_command(args, config: AppConfig) -> None:
    defaults = config.sweep
    try:
        sweep_config = SweepConfig(
            axis=args.axis or defaults.axis,
            values=_csv_floats(args.values) if args.values else list(defaults.values),
            trials=args.trials if args.trials is not None else defaults.trials,
            methods=_csv_methods(args.methods) if args.methods is not None else list(defaults.methods),
            rng_seed=_seed(args.seed, defaults.seed),
            output=args.out or defaults.output,
            shadowing=(args.shadowing == "on") if args.shadowing else defaults.shadowing,
            workers=args.workers if args.workers is not None else defaults.workers,
            fairness=defaults.fairness,
            extra_fovs=list(defaults.extra_fovs) if (args.axis or defaults.axis) == "radius" else [],
        )
    except ValidationError as exc:
        raise ConfigError(f"invalid sweep request: {exc}") from exc

    simulation = SweepSimulation(sweep_config, config)
    result = simulation.run()
    write_results(result, sweep_config.output)
    print_sweep_table(result)
    print_activity_log(simulation.activity_log)
    print_performance(simulation.get_performance_stats())


def run_oracle(args, config: AppConfig) -> None:
    seed = _seed(args.seed, config.sweep.seed)
    if args.trials < 1:
        raise ConfigError("--trials must be >= 1", trials=args.trials)

    ratios = []
    for t in range(args.trials):
        scenario, channels = sample_scenario(config.scenario, trial_seed(seed, 0, t))
        instance = build_instance(channels, config.phy, scenario.rf)
        heuristic = solve(Method.CO_NOMA, instance, options=config.solver).objective
        best = solve(Method.EXHAUSTIVE, instance, options=config.solver).objective
        ratios.append(heuristic / best if best > 0 else 1.0)

    _write_json(
        {
            "seed": seed,
            "trials": args.trials,
            "mean_ratio": math.fsum(ratios) / len(ratios),
            "min_ratio": min(ratios),
            "within_2_percent": sum(r >= 0.98 for r in ratios) / len(ratios),
        },
        args.out,
    )


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)

    try:
        config = load_config(args.config)
        config = _with_shadowing(config, args.shadowing)
        configure_logging(config.logging.directory, config.logging.level, run_id=args.command)
        logger = get_logger("cli")

        print("=" * 60, file=sys.stderr)
        print(f"    Co-NOMA Optimizer - {args.command}", file=sys.stderr)
        print("=" * 60, file=sys.stderr)
        logger.info("COMMAND_START", f"running {args.command}", command=args.command)

        if args.command == "solve":
            run_solve(args, config)
        elif args.command == "sweep":
            run_sweep_command(args, config)
        else:
            run_oracle(args, config)
    except CoNomaError as exc:
        print(json.dumps(exc.to_dict(), default=str), file=sys.stderr)
        return exit_code_for(exc)

    return 0


if __name__ == "__main__":
    sys.exit(main())
