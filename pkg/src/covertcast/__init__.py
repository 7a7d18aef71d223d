"""covertcast: minimum-time covert multicast planning for a UAV.

A numpy/scipy library that plans how fast a hovering UAV can multicast a
payload to Poisson-distributed ground users while a ground warden must be
kept from detecting the transmission. Implements one-hop (direct) and
two-hop (relay) schemes with closed-form power/prior settings, a
disk-constrained particle swarm hover search, exhaustive relay selection,
and a reproducible Monte-Carlo sweep harness.
"""

from .channel import ChannelParams, a2g_gain, g2g_mean_gain, los_probability, sample_g2g_fading
from .covertness import (
    TX_PROB_CAP,
    DetectionOutcome,
    PriorPair,
    covert_power_oh,
    covert_power_th,
    covert_snr_limit_oh,
    covert_snr_limit_oh_exact,
    dep_lower_bound,
    empirical_dep_oh,
    kl_oh,
)
from .errors import (
    AllInfeasibleError,
    ConfigError,
    InfeasibleError,
    InvalidHoverError,
    RegimeError,
)
from .experiments import (
    STRATEGIES,
    SWEEP_VARIABLES,
    LoadedConfig,
    StrategyStat,
    SweepResult,
    SweepSpec,
    dump_config,
    emit_csv,
    load_config,
    load_csv,
    run_sweep,
    run_trial,
    trial_seeds,
)
from .fbl import (
    FblCoeffs,
    LinkBudget,
    decode_error_exact,
    decode_error_linear,
    fbl_coeffs,
    linear_throughput_factor,
    throughput_oh,
    throughput_th,
    time_oh,
    time_th,
)
from .numerics import AccuracySpec, exp_integral_e1, q_function, rayleigh_interference_factor
from .params import (
    DEFAULT_DENSITY,
    ScenarioConfig,
    SystemParams,
    dbm_to_watts,
    default_channel,
    watts_to_dbm,
)
from .planner_oh import OhPlan, solve_oh_at, solve_oh_pso
from .planner_th import ThPlan, select_relay, solve_th_at
from .pso import PsoConfig, PsoResult, SwarmState, pso_minimize
from .scenario import (
    Circle,
    Point2,
    Scenario,
    elevation_angle_deg,
    farthest_gu,
    horizontal_distance,
    min_enclosing_circle,
    sample_ppp_scenario,
    scenario_from_json,
    scenario_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracySpec",
    "AllInfeasibleError",
    "ChannelParams",
    "Circle",
    "ConfigError",
    "DEFAULT_DENSITY",
    "DetectionOutcome",
    "FblCoeffs",
    "InfeasibleError",
    "InvalidHoverError",
    "LinkBudget",
    "LoadedConfig",
    "OhPlan",
    "Point2",
    "PriorPair",
    "PsoConfig",
    "PsoResult",
    "RegimeError",
    "STRATEGIES",
    "SWEEP_VARIABLES",
    "Scenario",
    "ScenarioConfig",
    "StrategyStat",
    "SwarmState",
    "SweepResult",
    "SweepSpec",
    "SystemParams",
    "ThPlan",
    "TX_PROB_CAP",
    "a2g_gain",
    "covert_power_oh",
    "covert_power_th",
    "covert_snr_limit_oh",
    "covert_snr_limit_oh_exact",
    "dbm_to_watts",
    "decode_error_exact",
    "decode_error_linear",
    "default_channel",
    "dep_lower_bound",
    "dump_config",
    "elevation_angle_deg",
    "emit_csv",
    "empirical_dep_oh",
    "exp_integral_e1",
    "farthest_gu",
    "fbl_coeffs",
    "g2g_mean_gain",
    "horizontal_distance",
    "kl_oh",
    "linear_throughput_factor",
    "load_config",
    "load_csv",
    "los_probability",
    "min_enclosing_circle",
    "pso_minimize",
    "q_function",
    "rayleigh_interference_factor",
    "run_sweep",
    "run_trial",
    "sample_g2g_fading",
    "sample_ppp_scenario",
    "scenario_from_json",
    "scenario_to_json",
    "select_relay",
    "solve_oh_at",
    "solve_oh_pso",
    "solve_th_at",
    "throughput_oh",
    "throughput_th",
    "time_oh",
    "time_th",
    "trial_seeds",
    "watts_to_dbm",
]
