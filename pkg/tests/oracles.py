"""Brute-force oracles shared by planner and acceptance tests."""

import math

import numpy as np

from covertcast import (
    PriorPair,
    TX_PROB_CAP,
    a2g_gain,
    covert_snr_limit_oh,
    farthest_gu,
    fbl_coeffs,
    horizontal_distance,
)


def oh_grid_minimum(scenario, hover, params, n_prior=400, n_power=400):
    """Exhaustive minimum time over the (power, prior) box at a fixed hover.

    The prior axis spans (0, 1) on a uniform grid that contains 0.5 exactly;
    the power axis spans the feasible interval for each prior, from the decode
    floor to the covertness budget inclusive, so the constraint boundary is in
    the grid. Returns math.inf when no grid point is feasible.
    """
    coeffs = fbl_coeffs(params.n, params.rate)
    _, worst_dist = farthest_gu(scenario, hover)
    gain_worst = a2g_gain(worst_dist, params.altitude_m, params.channel)
    gain_warden = a2g_gain(
        horizontal_distance(hover, scenario.willie), params.altitude_m, params.channel
    )
    power_floor = max(coeffs.lower_knee * params.sigma_g2_w / gain_worst, 0.0)
    priors = np.arange(1, n_prior) / n_prior
    priors = priors[(priors > params.rho_min) & (priors < TX_PROB_CAP)]
    # the open upper bound is approached by the optimizer's clamp; include it
    priors = np.append(priors, TX_PROB_CAP)
    best = math.inf
    for tx_prob in priors:
        pair = PriorPair(float(tx_prob), tx_prob_min=params.rho_min)
        power_cap = (
            params.sigma_w2_w * covert_snr_limit_oh(pair, params.epsilon, params.n) / gain_warden
        )
        if power_cap <= power_floor:
            continue
        power = np.linspace(power_floor, power_cap, n_power)
        snr = power * gain_worst / params.sigma_g2_w
        factor = 1.0 + 2.0 * coeffs.slope * (snr - coeffs.snr_threshold)
        ok = factor > 0.0
        if not ok.any():
            continue
        times = 2.0 * params.payload_bits / (tx_prob * params.n * params.rate * factor[ok])
        best = min(best, float(times.min()))
    return best
