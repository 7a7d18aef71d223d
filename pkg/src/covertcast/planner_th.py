"""Two-hop (relay) planning: closed form per relay, exhaustive selection.

The UAV hovers directly above the chosen relay. Its covert power budget uses
the warden's SNR averaged over the relay's Rayleigh-faded interference; the
bottleneck is the user farthest from the relay, whose combined SNR stacks the
direct UAV link and the mean relay link.
"""

from __future__ import annotations

import numpy as np
from dataclasses import dataclass

from .channel import a2g_gain, g2g_mean_gain
from .covertness import PriorPair, covert_power_th
from .errors import AllInfeasibleError, InfeasibleError
from .fbl import fbl_coeffs, linear_throughput_factor
from .params import SystemParams
from .scenario import Scenario, horizontal_distance


@dataclass(frozen=True)
class ThPlan:
    """Two-hop plan: power, prior (always one half), relay, bottleneck timing.

    `noise_to_interference` is the warden's noise over the mean relay
    interference power, the argument of the interference masking factor.
    """

    power_w: float
    tx_prob: float
    relay: int
    time_slots: float
    time_s: float
    worst_gu: int
    noise_to_interference: float


def solve_th_at(scenario: Scenario, relay: int, params: SystemParams) -> ThPlan:
    """Closed-form two-hop plan with ground user `relay` re-multicasting.

    Args:
        scenario: user/warden geometry; needs at least two users.
        relay: index of the relaying user.
        params: system constants (relay_power_w is the fixed relay power).

    Returns:
        ThPlan with the interference-scaled covert power and the expected
        transmission time to the user farthest from the relay.

    Raises:
        InfeasibleError: either hop's SNR sits at or below the
            zero-throughput knee of the linear decode model.
    """
    if len(scenario.gus) < 2:
        raise ValueError("two-hop planning needs at least 2 ground users")
    if not 0 <= relay < len(scenario.gus):
        raise ValueError(f"relay index {relay} out of range")
    relay_pos = scenario.gus[relay]
    warden_dist = horizontal_distance(relay_pos, scenario.willie)
    mean_interference = params.relay_power_w * g2g_mean_gain(warden_dist, params.channel)
    kappa = params.sigma_w2_w / mean_interference
    warden_gain = a2g_gain(warden_dist, params.altitude_m, params.channel)
    priors = PriorPair(0.5, tx_prob_min=params.rho_min)
    power = covert_power_th(
        warden_gain, kappa, params.sigma_w2_w, priors, params.epsilon, params.n
    )

    coeffs = fbl_coeffs(params.n, params.rate)
    relay_gain = a2g_gain(0.0, params.altitude_m, params.channel)  # UAV right above
    relay_snr = power * relay_gain / params.sigma_g2_w
    worst, worst_dist = _farthest_excluding(scenario, relay)
    combined_snr = (
        power * a2g_gain(worst_dist, params.altitude_m, params.channel)
        + params.relay_power_w * g2g_mean_gain(worst_dist, params.channel)
    ) / params.sigma_g2_w

    relay_factor = linear_throughput_factor(relay_snr, coeffs)
    combined_factor = linear_throughput_factor(combined_snr, coeffs)
    if relay_factor <= 0:
        raise InfeasibleError(
            f"relay uplink SNR {relay_snr:.4g} is at or below the zero-throughput knee"
        )
    if combined_factor <= 0:
        raise InfeasibleError(
            f"combined downlink SNR {combined_snr:.4g} is at or below the zero-throughput knee"
        )
    slots = 4.0 * params.payload_bits / (
        priors.low * params.n * params.rate * relay_factor * combined_factor
    )
    return ThPlan(
        power_w=power,
        tx_prob=0.5,
        relay=relay,
        time_slots=slots,
        time_s=slots * params.slot_s,
        worst_gu=worst,
        noise_to_interference=kappa,
    )


def select_relay(scenario: Scenario, params: SystemParams) -> ThPlan:
    """Exhaustive relay search: the best feasible two-hop plan over all users.

    Infeasible candidates are skipped; ties keep the lowest relay index.

    Raises:
        AllInfeasibleError: no relay admits a feasible plan.
    """
    if len(scenario.gus) < 2:
        raise ValueError("relay selection needs at least 2 ground users")
    best: ThPlan | None = None
    for r in range(len(scenario.gus)):
        try:
            plan = solve_th_at(scenario, r, params)
        except InfeasibleError:
            continue
        if best is None or plan.time_slots < best.time_slots:
            best = plan
    if best is None:
        raise AllInfeasibleError("every relay candidate is infeasible")
    return best


def _farthest_excluding(scenario: Scenario, relay: int) -> tuple[int, float]:
    """Farthest user from the relay, the relay itself excluded; ties -> lowest index."""
    xy = scenario._gu_xy
    rx, ry = scenario.gus[relay].x, scenario.gus[relay].y
    d = np.hypot(xy[:, 0] - rx, xy[:, 1] - ry)
    d[relay] = -np.inf
    idx = int(np.argmax(d))
    return idx, float(d[idx])
