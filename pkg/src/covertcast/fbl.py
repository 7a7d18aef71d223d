"""Finite-blocklength decode errors, effective throughput, transmission time.

Short-packet decoding fails with a probability that is a Gaussian tail in the
SNR; a three-piece linearization around a threshold SNR makes planning
tractable. Throughput is expected correctly-delivered bits per slot; time is
payload bits divided by throughput, in slots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RegimeError
from .numerics import q_function

_COEFF_RTOL = 1e-12

REGIME_SATURATED = "saturated-error"
REGIME_LINEAR = "linear"
REGIME_ERROR_FREE = "error-free"


@dataclass(frozen=True)
class FblCoeffs:
    """Linearized decode-error coefficients at blocklength n and target rate.

    `slope` is the error ramp slope; `snr_threshold` the SNR where the decode
    error crosses one half.
    """

    slope: float
    snr_threshold: float
    n: int
    rate: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.rate <= 0:
            raise ValueError(f"rate must be positive, got {self.rate}")
        slope_ref = math.sqrt(self.n / (2.0 * math.pi * (math.exp(2.0 * self.rate) - 1.0)))
        thr_ref = math.expm1(self.rate)
        if abs(self.slope - slope_ref) > _COEFF_RTOL * slope_ref:
            raise ValueError(f"slope {self.slope} inconsistent with n={self.n}, rate={self.rate}")
        if abs(self.snr_threshold - thr_ref) > _COEFF_RTOL * thr_ref:
            raise ValueError(
                f"snr_threshold {self.snr_threshold} inconsistent with rate={self.rate}"
            )

    @property
    def lower_knee(self) -> float:
        """SNR below which decoding always fails in the linear model."""
        return self.snr_threshold - 0.5 / self.slope

    @property
    def upper_knee(self) -> float:
        """SNR above which decoding is error-free in the linear model."""
        return self.snr_threshold + 0.5 / self.slope


def fbl_coeffs(n: int, rate: float) -> FblCoeffs:
    """Build the linearization coefficients for blocklength n and rate (bpcu)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if rate <= 0:
        raise ValueError(f"rate must be positive, got {rate}")
    slope = math.sqrt(n / (2.0 * math.pi * (math.exp(2.0 * rate) - 1.0)))
    return FblCoeffs(slope=slope, snr_threshold=math.expm1(rate), n=int(n), rate=float(rate))


@dataclass(frozen=True)
class LinkBudget:
    """An SNR together with its regime in the linear decode-error model."""

    snr: float
    regime: str

    @classmethod
    def classify(cls, snr: float, coeffs: FblCoeffs) -> "LinkBudget":
        if snr < coeffs.lower_knee:
            return cls(snr, REGIME_SATURATED)
        if snr > coeffs.upper_knee:
            return cls(snr, REGIME_ERROR_FREE)
        return cls(snr, REGIME_LINEAR)


def decode_error_exact(snr: float, n: int, rate: float) -> float:
    """Gaussian-approximation decode-error probability (no linearization).

    Kept as an ordering reference for the linear model; the rate enters in
    bits here, so the two forms are never mixed in one computation.
    """
    if snr <= 0:
        raise ValueError(f"snr must be positive, got {snr}")
    num = math.sqrt(n) * (1.0 + snr) * (math.log1p(snr) + 0.5 * math.log(n) - rate * math.log(2.0))
    den = math.sqrt(snr * (snr + 2.0))
    return q_function(num / den)


def decode_error_linear(snr: float, coeffs: FblCoeffs) -> float:
    """Three-piece linearized decode-error probability."""
    if snr < coeffs.lower_knee:
        return 1.0
    if snr > coeffs.upper_knee:
        return 0.0
    return min(1.0, max(0.0, 0.5 - coeffs.slope * (snr - coeffs.snr_threshold)))


def linear_throughput_factor(snr: float, coeffs: FblCoeffs) -> float:
    """1 + 2*slope*(snr - threshold): the linear-model throughput multiplier.

    No band check: negative below the saturated-error knee, and extrapolating
    past the error-free knee. Callers own the regime handling.
    """
    return 1.0 + 2.0 * coeffs.slope * (snr - coeffs.snr_threshold)


def _require_linear(hop: str, snr: float, coeffs: FblCoeffs, positive_throughput: bool) -> None:
    lo, hi = coeffs.lower_knee, coeffs.upper_knee
    if snr > hi:
        raise RegimeError(f"{hop} SNR {snr:.6g} is in the error-free regime (above {hi:.6g})")
    if snr < lo:
        raise RegimeError(f"{hop} SNR {snr:.6g} is in the saturated-error regime (below {lo:.6g})")
    if positive_throughput and snr <= lo:
        raise RegimeError(f"{hop} SNR {snr:.6g} gives zero throughput at the band edge")


def throughput_oh(snr: float, tx_prob: float, coeffs: FblCoeffs) -> float:
    """One-hop effective throughput in bits per slot, on the linear band."""
    _require_linear("one-hop", snr, coeffs, positive_throughput=False)
    return 0.5 * tx_prob * coeffs.n * coeffs.rate * linear_throughput_factor(snr, coeffs)


def time_oh(snr: float, tx_prob: float, coeffs: FblCoeffs, payload_bits: float) -> float:
    """One-hop transmission time in slots for `payload_bits`."""
    if payload_bits < 0:
        raise ValueError(f"payload_bits must be >= 0, got {payload_bits}")
    _require_linear("one-hop", snr, coeffs, positive_throughput=True)
    return 2.0 * payload_bits / (
        tx_prob * coeffs.n * coeffs.rate * linear_throughput_factor(snr, coeffs)
    )


def throughput_th(relay_snr: float, combined_snr: float, tx_prob: float, coeffs: FblCoeffs) -> float:
    """Two-hop effective throughput: both hops must decode, alternate slots carry each."""
    _require_linear("relay uplink", relay_snr, coeffs, positive_throughput=False)
    _require_linear("combined downlink", combined_snr, coeffs, positive_throughput=False)
    m = min(tx_prob, 1.0 - tx_prob)
    hops = linear_throughput_factor(relay_snr, coeffs) * linear_throughput_factor(combined_snr, coeffs)
    return 0.25 * m * coeffs.n * coeffs.rate * hops


def time_th(
    relay_snr: float,
    combined_snr: float,
    tx_prob: float,
    coeffs: FblCoeffs,
    payload_bits: float,
) -> float:
    """Two-hop transmission time in slots for `payload_bits`."""
    if payload_bits < 0:
        raise ValueError(f"payload_bits must be >= 0, got {payload_bits}")
    _require_linear("relay uplink", relay_snr, coeffs, positive_throughput=True)
    _require_linear("combined downlink", combined_snr, coeffs, positive_throughput=True)
    m = min(tx_prob, 1.0 - tx_prob)
    hops = linear_throughput_factor(relay_snr, coeffs) * linear_throughput_factor(combined_snr, coeffs)
    return 4.0 * payload_bits / (m * coeffs.n * coeffs.rate * hops)
