"""Air-to-ground and ground-to-ground channel models.

Air-to-ground links follow a probabilistic line-of-sight model: an S-curve
LoS probability in the elevation angle multiplies a power-law loss on the 3D
distance. Ground-to-ground links are quasi-static Rayleigh: unit-mean
exponential power fading on a power-law mean gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .scenario import elevation_angle_deg


@dataclass(frozen=True)
class ChannelParams:
    """Environment constants: S-curve pair (per-degree f) and loss exponents."""

    s_curve_e: float
    s_curve_f: float
    alpha_los: float
    alpha_g2g: float

    def __post_init__(self):
        if self.s_curve_e <= 0 or self.s_curve_f <= 0:
            raise ValueError("S-curve parameters must be positive")
        if self.alpha_los >= 0 or self.alpha_g2g >= 0:
            raise ValueError("loss exponents must be negative")


def los_probability(theta_deg: float, params: ChannelParams) -> float:
    """S-curve line-of-sight probability at elevation angle theta (degrees)."""
    if not 0.0 < theta_deg <= 90.0:
        raise ValueError(f"theta_deg must be in (0, 90], got {theta_deg}")
    e, f = params.s_curve_e, params.s_curve_f
    return 1.0 / (1.0 + e * math.exp(-f * (theta_deg - e)))


def a2g_gain(horizontal_dist: float, altitude_m: float, params: ChannelParams) -> float:
    """Air-to-ground channel gain: LoS probability times 3D-distance path loss."""
    if altitude_m <= 0:
        raise ValueError(f"altitude_m must be positive, got {altitude_m}")
    theta = elevation_angle_deg(horizontal_dist, altitude_m)
    d = math.hypot(horizontal_dist, altitude_m)
    return los_probability(theta, params) * d**params.alpha_los


def g2g_mean_gain(dist: float, params: ChannelParams) -> float:
    """Mean ground-to-ground gain (unit-mean fading averages out)."""
    if dist <= 0:
        raise ValueError(f"dist must be positive, got {dist}")
    return dist**params.alpha_g2g


def sample_g2g_fading(rng_seed_or_stream, size=None):
    """Draw squared Rayleigh envelopes: unit-mean exponential power gains."""
    rng = rng_seed_or_stream
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    return rng.exponential(1.0, size)
