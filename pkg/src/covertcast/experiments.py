"""Monte-Carlo study harness: per-trial strategy comparison, seeded sweeps,
and the JSON/CSV formats used by the command line."""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import ConfigError, InfeasibleError
from .params import DEFAULT_DENSITY, ScenarioConfig, SystemParams, dbm_to_watts, default_channel
from .planner_oh import solve_oh_at, solve_oh_pso
from .planner_th import select_relay
from .scenario import Point2, Scenario, min_enclosing_circle, sample_ppp_scenario

STRATEGIES = ("oh_pso", "th_exhaustive", "baseline_center")
SWEEP_VARIABLES = ("density", "willie_distance", "epsilon")

_CSV_COLUMNS = ("variable", "value", "strategy", "mean_time_s", "ci95_s", "infeasible", "trials")


@dataclass(frozen=True)
class SweepSpec:
    """One Monte-Carlo sweep: which variable, grid values, trials, seed."""

    variable: str
    values: tuple
    trials: int = 200
    seed: int = 0
    strategies: tuple = STRATEGIES

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError(f"sweep.variable: expected one of {SWEEP_VARIABLES}, got {self.variable!r}")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise ConfigError("sweep.values: must be non-empty")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ConfigError("sweep.values: must be strictly increasing")
        if self.trials < 1:
            raise ConfigError(f"sweep.trials: must be >= 1, got {self.trials}")
        object.__setattr__(self, "strategies", tuple(self.strategies))
        if not self.strategies:
            raise ConfigError("sweep.strategies: must be non-empty")
        for s in self.strategies:
            if s not in STRATEGIES:
                raise ConfigError(f"sweep.strategies: unknown strategy {s!r}")


@dataclass(frozen=True)
class StrategyStat:
    """Per-strategy aggregate over the feasible trials of one sweep point."""

    mean_time_s: float
    ci95_halfwidth_s: float
    infeasible: int


@dataclass(frozen=True)
class SweepResult:
    """One sweep point: swept value plus per-strategy statistics."""

    variable: str
    value: float
    trials: int
    stats: dict[str, StrategyStat]


def run_trial(
    scenario: Scenario,
    params: SystemParams,
    strategies: Sequence[str] = STRATEGIES,
    seed: int = 0,
) -> dict[str, float]:
    """Solve one scenario with each strategy; infeasible entries come back NaN.

    baseline_center plans at the enclosing-circle center, oh_pso runs the
    hover search (seeded by `seed`), th_exhaustive runs the relay search.
    Times are in seconds.
    """
    times: dict[str, float] = {}
    for strat in strategies:
        try:
            if strat == "baseline_center":
                center = min_enclosing_circle(scenario.gus).center
                times[strat] = solve_oh_at(scenario, center, params).time_s
            elif strat == "oh_pso":
                times[strat] = solve_oh_pso(scenario, params, seed=seed).time_s
            elif strat == "th_exhaustive":
                if len(scenario.gus) < 2:
                    times[strat] = math.nan  # no remaining receivers
                else:
                    times[strat] = select_relay(scenario, params).time_s
            else:
                raise ConfigError(f"unknown strategy {strat!r}")
        except InfeasibleError:
            times[strat] = math.nan
    return times


def trial_seeds(master_seed: int, value_index: int, trial_index: int) -> tuple[int, int]:
    """Derived (scenario, pso) seeds; independent of execution order and workers."""
    ss = np.random.SeedSequence(master_seed, spawn_key=(value_index, trial_index))
    scenario_seed, pso_seed = (int(s) for s in ss.generate_state(2, np.uint64))
    return scenario_seed, pso_seed


def run_sweep(
    spec: SweepSpec,
    params: SystemParams,
    scenario_cfg: ScenarioConfig | None = None,
    workers: int = 1,
    progress: Callable[[str], None] | None = None,
) -> list[SweepResult]:
    """Run the sweep: `spec.trials` fresh layouts per grid value.

    Per-trial seeds derive from (spec.seed, value index, trial index), so the
    output is identical for any worker count. Means and 95% normal-
    approximation half-widths aggregate the feasible trials only.
    """
    cfg = scenario_cfg if scenario_cfg is not None else ScenarioConfig()
    results = []
    for vi, value in enumerate(spec.values):
        params_v, cfg_v = _apply_sweep_value(spec.variable, value, params, cfg)

        def one_trial(ti: int, _params=params_v, _cfg=cfg_v, _vi=vi) -> dict[str, float]:
            scenario_seed, pso_seed = trial_seeds(spec.seed, _vi, ti)
            scenario = sample_ppp_scenario(
                _cfg.density, _cfg.area_radius_m, _cfg.willie, _params.altitude_m, scenario_seed
            )
            return run_trial(scenario, _params, spec.strategies, pso_seed)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(one_trial, ti) for ti in range(spec.trials)]
                rows = []
                for ti, fut in enumerate(futures):
                    rows.append(fut.result())
                    if progress is not None:
                        progress(f"value={value} trial={ti + 1}/{spec.trials}")
        else:
            rows = []
            for ti in range(spec.trials):
                rows.append(one_trial(ti))
                if progress is not None:
                    progress(f"value={value} trial={ti + 1}/{spec.trials}")
        results.append(
            SweepResult(
                variable=spec.variable,
                value=value,
                trials=spec.trials,
                stats=_aggregate(rows, spec.strategies, spec.trials),
            )
        )
    return results


def _apply_sweep_value(
    variable: str, value: float, params: SystemParams, cfg: ScenarioConfig
) -> tuple[SystemParams, ScenarioConfig]:
    if variable == "density":
        return params, replace(cfg, density=value)
    if variable == "willie_distance":
        return params, replace(cfg, willie=Point2(value, 0.0))
    if variable == "epsilon":
        return replace(params, epsilon=value), cfg
    raise ConfigError(f"unknown sweep variable {variable!r}")


def _aggregate(
    rows: list[dict[str, float]], strategies: Sequence[str], trials: int
) -> dict[str, StrategyStat]:
    stats = {}
    for strat in strategies:
        feasible = [row[strat] for row in rows if not math.isnan(row[strat])]
        infeasible = trials - len(feasible)
        if feasible:
            mean = math.fsum(feasible) / len(feasible)
            if len(feasible) >= 2:
                var = math.fsum((v - mean) ** 2 for v in feasible) / (len(feasible) - 1)
                ci = 1.96 * math.sqrt(var / len(feasible))
            else:
                ci = math.nan
        else:
            mean = math.nan
            ci = math.nan
        stats[strat] = StrategyStat(mean_time_s=mean, ci95_halfwidth_s=ci, infeasible=infeasible)
    return stats


# ---------------------------------------------------------------------------
# CSV results
# ---------------------------------------------------------------------------


def emit_csv(results: Sequence[SweepResult], path) -> None:
    """Write sweep results; columns: variable,value,strategy,mean_time_s,ci95_s,infeasible,trials."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for res in results:
            for strat, st in res.stats.items():
                writer.writerow(
                    [
                        res.variable,
                        repr(float(res.value)),
                        strat,
                        repr(float(st.mean_time_s)),
                        repr(float(st.ci95_halfwidth_s)),
                        st.infeasible,
                        res.trials,
                    ]
                )


def load_csv(path) -> list[SweepResult]:
    """Read sweep results back; emit_csv(load_csv(p), p2) reproduces the bytes."""
    results: list[SweepResult] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if tuple(header or ()) != _CSV_COLUMNS:
            raise ConfigError(f"results csv: expected header {','.join(_CSV_COLUMNS)}")
        for row in reader:
            if len(row) != len(_CSV_COLUMNS):
                raise ConfigError(f"results csv: malformed row {row!r}")
            variable, value, strat = row[0], float(row[1]), row[2]
            stat = StrategyStat(float(row[3]), float(row[4]), int(row[5]))
            trials = int(row[6])
            if results and results[-1].variable == variable and results[-1].value == value:
                results[-1].stats[strat] = stat
            else:
                results.append(SweepResult(variable, value, trials, {strat: stat}))
    return results


# ---------------------------------------------------------------------------
# JSON configuration
# ---------------------------------------------------------------------------

_SYSTEM_NUMBER_KEYS = (
    "n", "rate", "payload_bits", "slot_s", "epsilon", "relay_power_w", "rho_min",
    "altitude_m", "s_curve_e", "s_curve_f", "alpha_los", "alpha_g2g",
)
_SYSTEM_NOISE_KEYS = ("sigma_g2_w", "sigma_w2_w", "sigma_g2_dbm", "sigma_w2_dbm")
_SWEEP_KEYS = ("variable", "values", "trials", "seed", "strategies")
_SCENARIO_KEYS = ("density", "area_radius_m", "willie")


class LoadedConfig(NamedTuple):
    system: SystemParams
    sweep: SweepSpec | None
    scenario: ScenarioConfig


def _number(section: dict, section_name: str, key: str, default):
    value = section.get(key, default)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"{section_name}.{key}: expected a number, got {value!r}")
    return value


def load_config(path) -> LoadedConfig:
    """Parse the experiment config document: system constants, optional sweep
    and scenario sections. Raises ConfigError naming the offending field.

    Noise may be given in watts (sigma_*_w) or dBm (sigma_*_dbm), not both.
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(doc) - {"system", "sweep", "scenario"}
    if unknown:
        raise ConfigError(f"unknown top-level sections {sorted(unknown)}")

    system = _load_system(doc.get("system", {}))
    sweep = _load_sweep(doc["sweep"]) if "sweep" in doc else None
    scenario = _load_scenario(doc.get("scenario", {}))
    return LoadedConfig(system, sweep, scenario)


def _load_system(section) -> SystemParams:
    if not isinstance(section, dict):
        raise ConfigError("system: expected an object")
    unknown = set(section) - set(_SYSTEM_NUMBER_KEYS) - set(_SYSTEM_NOISE_KEYS)
    if unknown:
        raise ConfigError(f"system: unknown fields {sorted(unknown)}")
    for w_key, dbm_key in (("sigma_g2_w", "sigma_g2_dbm"), ("sigma_w2_w", "sigma_w2_dbm")):
        if w_key in section and dbm_key in section:
            raise ConfigError(f"system: give {w_key} or {dbm_key}, not both")

    def noise(w_key: str, dbm_key: str, default_dbm: float) -> float:
        if w_key in section:
            return _number(section, "system", w_key, None)
        return dbm_to_watts(_number(section, "system", dbm_key, default_dbm))

    base = default_channel()
    try:
        return SystemParams(
            n=int(_number(section, "system", "n", 100)),
            rate=float(_number(section, "system", "rate", 0.1)),
            payload_bits=float(_number(section, "system", "payload_bits", 1e6)),
            slot_s=float(_number(section, "system", "slot_s", 1e-3)),
            epsilon=float(_number(section, "system", "epsilon", 0.1)),
            sigma_g2_w=float(noise("sigma_g2_w", "sigma_g2_dbm", -70.0)),
            sigma_w2_w=float(noise("sigma_w2_w", "sigma_w2_dbm", -70.0)),
            relay_power_w=float(_number(section, "system", "relay_power_w", 0.01)),
            rho_min=float(_number(section, "system", "rho_min", 0.01)),
            altitude_m=float(_number(section, "system", "altitude_m", 500.0)),
            channel=type(base)(
                s_curve_e=float(_number(section, "system", "s_curve_e", base.s_curve_e)),
                s_curve_f=float(_number(section, "system", "s_curve_f", base.s_curve_f)),
                alpha_los=float(_number(section, "system", "alpha_los", base.alpha_los)),
                alpha_g2g=float(_number(section, "system", "alpha_g2g", base.alpha_g2g)),
            ),
        )
    except ValueError as exc:
        raise ConfigError(f"system: {exc}") from exc


def _load_sweep(section) -> SweepSpec:
    if not isinstance(section, dict):
        raise ConfigError("sweep: expected an object")
    unknown = set(section) - set(_SWEEP_KEYS)
    if unknown:
        raise ConfigError(f"sweep: unknown fields {sorted(unknown)}")
    if "variable" not in section:
        raise ConfigError("sweep.variable: required")
    if "values" not in section:
        raise ConfigError("sweep.values: required")
    values = section["values"]
    if not isinstance(values, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
    ):
        raise ConfigError("sweep.values: expected a list of numbers")
    strategies = section.get("strategies", list(STRATEGIES))
    if not isinstance(strategies, list) or not all(isinstance(s, str) for s in strategies):
        raise ConfigError("sweep.strategies: expected a list of strategy names")
    return SweepSpec(
        variable=section["variable"],
        values=tuple(values),
        trials=int(_number(section, "sweep", "trials", 200)),
        seed=int(_number(section, "sweep", "seed", 0)),
        strategies=tuple(strategies),
    )


def _load_scenario(section) -> ScenarioConfig:
    if not isinstance(section, dict):
        raise ConfigError("scenario: expected an object")
    unknown = set(section) - set(_SCENARIO_KEYS)
    if unknown:
        raise ConfigError(f"scenario: unknown fields {sorted(unknown)}")
    willie = section.get("willie", [600.0, 0.0])
    if not (isinstance(willie, list) and len(willie) == 2):
        raise ConfigError("scenario.willie: expected [x, y]")
    try:
        return ScenarioConfig(
            density=float(_number(section, "scenario", "density", DEFAULT_DENSITY)),
            area_radius_m=float(_number(section, "scenario", "area_radius_m", 500.0)),
            willie=Point2(float(willie[0]), float(willie[1])),
        )
    except ValueError as exc:
        raise ConfigError(f"scenario: {exc}") from exc


def dump_config(
    system: SystemParams,
    sweep: SweepSpec | None = None,
    scenario: ScenarioConfig | None = None,
) -> str:
    """Canonical config document; dump(load(dump(...))) is byte-stable."""
    doc: dict = {
        "system": {
            "n": system.n,
            "rate": system.rate,
            "payload_bits": system.payload_bits,
            "slot_s": system.slot_s,
            "epsilon": system.epsilon,
            "sigma_g2_w": system.sigma_g2_w,
            "sigma_w2_w": system.sigma_w2_w,
            "relay_power_w": system.relay_power_w,
            "rho_min": system.rho_min,
            "altitude_m": system.altitude_m,
            "s_curve_e": system.channel.s_curve_e,
            "s_curve_f": system.channel.s_curve_f,
            "alpha_los": system.channel.alpha_los,
            "alpha_g2g": system.channel.alpha_g2g,
        }
    }
    if sweep is not None:
        doc["sweep"] = {
            "variable": sweep.variable,
            "values": list(sweep.values),
            "trials": sweep.trials,
            "seed": sweep.seed,
            "strategies": list(sweep.strategies),
        }
    if scenario is not None:
        doc["scenario"] = {
            "density": scenario.density,
            "area_radius_m": scenario.area_radius_m,
            "willie": [scenario.willie.x, scenario.willie.y],
        }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
