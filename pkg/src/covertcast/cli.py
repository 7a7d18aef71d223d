"""Command line: scenario sampling, one-shot planning, Monte-Carlo sweeps.

Exit codes: 0 success, 2 configuration error, 3 nothing feasible.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConfigError, InfeasibleError
from .experiments import LoadedConfig, SweepSpec, emit_csv, load_config, run_sweep
from .params import DEFAULT_DENSITY, ScenarioConfig, SystemParams
from .planner_oh import solve_oh_pso
from .planner_th import select_relay
from .scenario import Point2, Scenario, sample_ppp_scenario, scenario_from_json, scenario_to_json

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covertcast",
        description="Minimum-time covert multicast planning for a UAV under a warden's detection constraint.",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("sample-scenario", help="draw a Poisson user layout and print it as JSON")
    p.add_argument("--density", type=float, default=DEFAULT_DENSITY, help="users per square meter")
    p.add_argument("--radius", type=float, default=500.0, help="service disk radius (m)")
    p.add_argument("--willie", type=float, nargs=2, default=(600.0, 0.0), metavar=("X", "Y"))
    p.add_argument("--altitude", type=float, default=500.0, help="UAV altitude (m)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON here instead of stdout")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("solve-oh", help="one-hop plan: swarm hover search plus closed form")
    _add_solve_args(p)
    p.add_argument("--seed", type=int, default=0, help="swarm seed")
    p.set_defaults(func=_cmd_solve_oh)

    p = sub.add_parser("solve-th", help="two-hop plan: exhaustive relay selection")
    _add_solve_args(p)
    p.set_defaults(func=_cmd_solve_th)

    p = sub.add_parser("sweep", help="run the Monte-Carlo sweep from a config file")
    p.add_argument("--config", required=True, help="JSON config with system and sweep sections")
    p.add_argument("--seed", type=int, help="override sweep.seed")
    p.add_argument("--trials", type=int, help="override sweep.trials")
    p.add_argument("--strategies", help="override sweep.strategies (comma-separated)")
    p.add_argument("--out", default="sweep.csv", help="results CSV path")
    p.add_argument("--workers", type=int, default=1, help="worker threads")
    p.add_argument("--quiet", action="store_true", help="suppress per-trial progress lines")
    p.set_defaults(func=_cmd_sweep)
    return parser


def _add_solve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", required=True, help="scenario JSON path (see sample-scenario)")
    p.add_argument("--config", help="JSON config; only the system section is used")
    p.add_argument("--out", help="write the plan JSON here instead of stdout")


def _load_system(path) -> SystemParams:
    if path is None:
        return SystemParams()
    return load_config(path).system


def _load_scenario_file(path) -> Scenario:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read scenario: {exc}") from exc
    try:
        return scenario_from_json(text)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_sample(args) -> int:
    try:
        scenario = sample_ppp_scenario(
            args.density, args.radius, Point2(*args.willie), args.altitude, args.seed
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    _emit(scenario_to_json(scenario), args.out)
    return EXIT_OK


def _cmd_solve_oh(args) -> int:
    params = _load_system(args.config)
    scenario = _load_scenario_file(args.scenario)
    plan = solve_oh_pso(scenario, params, seed=args.seed)
    _emit(
        json.dumps(
            {
                "scheme": "oh",
                "power_w": plan.power_w,
                "tx_prob": plan.tx_prob,
                "hover": [plan.hover.x, plan.hover.y],
                "time_slots": plan.time_slots,
                "time_s": plan.time_s,
                "worst_gu": plan.worst_gu,
            }
        ),
        args.out,
    )
    return EXIT_OK


def _cmd_solve_th(args) -> int:
    params = _load_system(args.config)
    scenario = _load_scenario_file(args.scenario)
    if len(scenario.gus) < 2:
        raise InfeasibleError("two-hop planning needs at least 2 ground users")
    plan = select_relay(scenario, params)
    _emit(
        json.dumps(
            {
                "scheme": "th",
                "power_w": plan.power_w,
                "tx_prob": plan.tx_prob,
                "relay": plan.relay,
                "time_slots": plan.time_slots,
                "time_s": plan.time_s,
                "worst_gu": plan.worst_gu,
                "noise_to_interference": plan.noise_to_interference,
            }
        ),
        args.out,
    )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    loaded: LoadedConfig = load_config(args.config)
    if loaded.sweep is None:
        raise ConfigError("sweep: section required for the sweep command")
    spec = loaded.sweep
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.strategies is not None:
        overrides["strategies"] = tuple(s.strip() for s in args.strategies.split(",") if s.strip())
    if overrides:
        spec = SweepSpec(
            variable=spec.variable,
            values=spec.values,
            trials=overrides.get("trials", spec.trials),
            seed=overrides.get("seed", spec.seed),
            strategies=overrides.get("strategies", spec.strategies),
        )
    if args.workers < 1:
        raise ConfigError(f"--workers must be >= 1, got {args.workers}")
    progress = None if args.quiet else lambda line: print(line)
    results = run_sweep(spec, loaded.system, loaded.scenario, workers=args.workers, progress=progress)
    emit_csv(results, args.out)
    if not args.quiet:
        print(f"wrote {args.out}")
    return EXIT_OK
