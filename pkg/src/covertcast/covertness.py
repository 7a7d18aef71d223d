"""Warden-side detection math: divergences, error-probability bounds, covert
power budgets, and an empirical energy-detector oracle validating the bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .numerics import rayleigh_interference_factor

# Clamp applied to optimizer priors; sits strictly inside the default bounds.
TX_PROB_CAP = 1.0 - 1e-6
_DEFAULT_TX_PROB_MAX = 1.0 - 1e-9
_THRESHOLD_CANDIDATES = 512


@dataclass(frozen=True)
class PriorPair:
    """Bernoulli transmit prior and its complement, with open interval bounds."""

    tx_prob: float
    tx_prob_min: float = 0.01
    tx_prob_max: float = _DEFAULT_TX_PROB_MAX

    def __post_init__(self):
        if not 0.0 < self.tx_prob_min <= 0.5:
            raise ValueError(f"tx_prob_min must be in (0, 0.5], got {self.tx_prob_min}")
        if not 0.5 < self.tx_prob_max < 1.0:
            raise ValueError(f"tx_prob_max must be in (0.5, 1), got {self.tx_prob_max}")
        if not self.tx_prob_min < self.tx_prob < self.tx_prob_max:
            raise ValueError(
                f"tx_prob must lie in ({self.tx_prob_min}, {self.tx_prob_max}), got {self.tx_prob}"
            )

    @property
    def idle_prob(self) -> float:
        return 1.0 - self.tx_prob

    @property
    def low(self) -> float:
        return min(self.tx_prob, 1.0 - self.tx_prob)

    @property
    def high(self) -> float:
        return max(self.tx_prob, 1.0 - self.tx_prob)


@dataclass(frozen=True)
class DetectionOutcome:
    """Detector operating point: p_fa = P(decide idle | transmitting),
    p_md = P(decide transmitting | idle), xi the prior-weighted total."""

    p_fa: float
    p_md: float
    xi: float

    def __post_init__(self):
        for name in ("p_fa", "p_md", "xi"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be a probability, got {v}")


def kl_oh(warden_snr: float) -> float:
    """Per-channel-use KL divergence between the warden's two Gaussian hypotheses."""
    if warden_snr < 0:
        raise ValueError(f"warden_snr must be >= 0, got {warden_snr}")
    return 0.5 * (warden_snr - math.log1p(warden_snr))


def dep_lower_bound(priors: PriorPair, kl_per_use: float, n: int) -> float:
    """Pinsker lower bound on the warden's optimal detection error probability.

    May be negative, in which case the bound is vacuous; returned unchanged.
    """
    if kl_per_use < 0:
        raise ValueError(f"kl_per_use must be >= 0, got {kl_per_use}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return priors.low - priors.high * math.sqrt(0.5 * n * kl_per_use)


def covert_snr_limit_oh(priors: PriorPair, epsilon: float, n: int) -> float:
    """Largest warden SNR meeting the covertness target, small-SNR expansion."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 4.0 * epsilon * math.sqrt(2.0 / n) * priors.low / priors.high


def covert_snr_limit_oh_exact(priors: PriorPair, epsilon: float, n: int) -> float:
    """Warden-SNR cap from the exact divergence (no small-SNR expansion).

    Slightly larger than the expansion-based limit; kept for validation, the
    planners use the expansion.
    """
    target = (4.0 * epsilon * priors.low / priors.high) ** 2 / n
    lo = covert_snr_limit_oh(priors, epsilon, n)
    hi = 2.0 * lo + 1.0
    while hi - math.log1p(hi) < target:
        hi *= 2.0
    return float(brentq(lambda g: g - math.log1p(g) - target, lo, hi, xtol=1e-15, rtol=8.9e-16))


def covert_power_oh(
    warden_gain: float, noise_w: float, priors: PriorPair, epsilon: float, n: int
) -> float:
    """Covertness-tight transmit power against a noise-only warden."""
    if warden_gain <= 0:
        raise ValueError(f"warden_gain must be positive, got {warden_gain}")
    if noise_w <= 0:
        raise ValueError(f"noise_w must be positive, got {noise_w}")
    return noise_w * covert_snr_limit_oh(priors, epsilon, n) / warden_gain


def covert_power_th(
    warden_gain: float,
    noise_to_interference: float,
    noise_w: float,
    priors: PriorPair,
    epsilon: float,
    n: int,
) -> float:
    """Covertness-tight transmit power when relay interference masks the warden.

    `noise_to_interference` is the warden's noise over the mean relay
    interference power; the budget grows as it shrinks.
    """
    base = covert_power_oh(warden_gain, noise_w, priors, epsilon, n)
    return base / rayleigh_interference_factor(noise_to_interference)


def empirical_dep_oh(
    warden_gain: float,
    power_w: float,
    noise_w: float,
    priors: PriorPair,
    n: int,
    trials: int,
    seed: int,
) -> DetectionOutcome:
    """Monte-Carlo energy-detection oracle for the warden's error probability.

    Simulates `trials` slots per hypothesis (idle: noise only; transmitting:
    noise plus received signal), applies the energy statistic (the
    likelihood-ratio statistic for zero-mean Gaussians of unequal variance),
    sweeps quantile-spaced thresholds plus the two blind decisions, and
    returns the operating point minimizing the prior-weighted error.
    """
    if warden_gain <= 0 or noise_w <= 0:
        raise ValueError("warden_gain and noise_w must be positive")
    if power_w < 0:
        raise ValueError(f"power_w must be >= 0, got {power_w}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    idle = noise_w * np.sum(rng.standard_normal((trials, n)) ** 2, axis=1)
    tx_var = noise_w + power_w * warden_gain
    tx = tx_var * np.sum(rng.standard_normal((trials, n)) ** 2, axis=1)
    pooled = np.concatenate([idle, tx])
    cand = np.quantile(pooled, np.linspace(0.0, 1.0, _THRESHOLD_CANDIDATES))
    cand = np.concatenate(([-np.inf], cand, [np.inf]))
    idle.sort()
    tx.sort()
    # decide "transmitting" when the statistic exceeds the threshold
    p_md = 1.0 - np.searchsorted(idle, cand, side="right") / trials
    p_fa = np.searchsorted(tx, cand, side="right") / trials
    xi = priors.idle_prob * p_fa + priors.tx_prob * p_md
    k = int(np.argmin(xi))
    return DetectionOutcome(float(p_fa[k]), float(p_md[k]), float(xi[k]))
