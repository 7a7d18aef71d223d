"""One-hop (direct multicast) planning.

For a fixed hover point the bottleneck user is the farthest one; the
covertness budget pins the transmit power, a closed-form case split pins the
transmit prior, and the bottleneck SNR gives the minimum transmission time.
The hover search runs a particle swarm over the service disk, seeded with the
enclosing-circle center and the user centroid so it never loses to either
baseline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .channel import a2g_gain
from .covertness import TX_PROB_CAP, PriorPair, covert_power_oh
from .errors import InfeasibleError, InvalidHoverError
from .fbl import FblCoeffs, fbl_coeffs, linear_throughput_factor
from .params import SystemParams
from .pso import PsoConfig, pso_minimize
from .scenario import (
    Circle,
    Point2,
    Scenario,
    farthest_gu,
    horizontal_distance,
    min_enclosing_circle,
)

_HOVER_TOL = 1e-9


@dataclass(frozen=True)
class OhPlan:
    """One-hop plan: transmit power, prior, hover point, bottleneck timing."""

    power_w: float
    tx_prob: float
    hover: Point2
    time_slots: float
    time_s: float
    worst_gu: int


def solve_oh_at(scenario: Scenario, hover: Point2, params: SystemParams) -> OhPlan:
    """Closed-form minimum-time one-hop plan at a fixed hover point.

    Args:
        scenario: user/warden geometry.
        hover: horizontal UAV position, inside the service disk.
        params: system constants.

    Returns:
        OhPlan with the covertness-tight power, the optimal prior, and the
        farthest-user transmission time (slots and seconds).

    Raises:
        InvalidHoverError: hover outside the service disk.
        InfeasibleError: the covert power budget is at or below the decode
            floor of the farthest user (zero-throughput regime).
    """
    if horizontal_distance(hover, scenario.area_center) > scenario.area_radius_m + _HOVER_TOL:
        raise InvalidHoverError(
            f"hover ({hover.x:.6g}, {hover.y:.6g}) lies outside the service disk"
        )
    coeffs = fbl_coeffs(params.n, params.rate)
    worst, worst_dist = farthest_gu(scenario, hover)
    gain_worst = a2g_gain(worst_dist, params.altitude_m, params.channel)
    gain_warden = a2g_gain(
        horizontal_distance(hover, scenario.willie), params.altitude_m, params.channel
    )
    tx_prob = _optimal_tx_prob(gain_worst, gain_warden, params, coeffs)
    priors = PriorPair(tx_prob, tx_prob_min=params.rho_min)
    power = covert_power_oh(gain_warden, params.sigma_w2_w, priors, params.epsilon, params.n)
    power_floor = coeffs.lower_knee * params.sigma_g2_w / gain_worst
    if power <= power_floor:
        raise InfeasibleError(
            f"covert budget {power:.4g} W is at or below the decode floor "
            f"{power_floor:.4g} W of the farthest user"
        )
    snr = power * gain_worst / params.sigma_g2_w
    # Linear throughput factor, applied without a band check: past the
    # error-free knee it extrapolates, matching the closed forms (and keeping
    # the time strictly monotone in the budget).
    factor = linear_throughput_factor(snr, coeffs)
    slots = 2.0 * params.payload_bits / (tx_prob * params.n * params.rate * factor)
    return OhPlan(
        power_w=power,
        tx_prob=tx_prob,
        hover=hover,
        time_slots=slots,
        time_s=slots * params.slot_s,
        worst_gu=worst,
    )


def _optimal_tx_prob(
    gain_worst: float, gain_warden: float, params: SystemParams, coeffs: FblCoeffs
) -> float:
    """Case split for the optimal transmit prior at a fixed hover.

    Whenever the throughput falls with the prior at the budget-tight power
    (the usual case; always when 2*slope*threshold >= 1), the optimum is 0.5.
    Otherwise it is the largest prior admitted by the power floor, or the
    open-interval cap when the floor is negative.
    """
    budget_slope = (
        4.0
        * params.epsilon
        * params.sigma_w2_w
        * gain_worst
        * math.sqrt(2.0 / params.n)
        / (params.sigma_g2_w * gain_warden)
    )
    if budget_slope >= (1.0 - 2.0 * coeffs.slope * coeffs.snr_threshold) / (2.0 * coeffs.slope):
        return 0.5
    num = 4.0 * params.epsilon * params.sigma_w2_w * gain_worst
    den = num + coeffs.lower_knee * params.sigma_g2_w * gain_warden * math.sqrt(params.n / 2.0)
    # This branch requires a negative lower knee, so den < num: the power
    # floor never binds and the cap is the open upper bound on the prior.
    cap = num / den if den > 0 else math.inf
    return min(cap, TX_PROB_CAP)


def solve_oh_pso(
    scenario: Scenario,
    params: SystemParams,
    pso_config: PsoConfig | None = None,
    seed: int | None = None,
) -> OhPlan:
    """Search hover positions with a particle swarm; fitness is the plan time.

    The initial swarm always contains the enclosing-circle center and the
    user centroid, so the result is at least as good as both. Deterministic
    given the seed (overrides pso_config.seed when provided).

    Raises:
        AllInfeasibleError: every evaluated hover position was infeasible.
    """
    config = pso_config if pso_config is not None else PsoConfig()
    if seed is not None:
        config = replace(config, seed=seed)
    disk = Circle(scenario.area_center, scenario.area_radius_m)
    mec_center = min_enclosing_circle(scenario.gus).center
    centroid = Point2(
        math.fsum(p.x for p in scenario.gus) / len(scenario.gus),
        math.fsum(p.y for p in scenario.gus) / len(scenario.gus),
    )

    def fitness(hover: Point2) -> float:
        try:
            return solve_oh_at(scenario, hover, params).time_slots
        except InfeasibleError:
            return math.inf

    best, _, _ = pso_minimize(fitness, disk, config, seeded_candidates=(mec_center, centroid))
    return solve_oh_at(scenario, best, params)
