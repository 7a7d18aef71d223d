"""Gaussian tail and exponential-integral helpers behind the closed forms."""

import math
from dataclasses import dataclass

from scipy import special

# Beyond this the direct exp(k)*E1(k) product runs into overflow/underflow;
# switch to the asymptotic series for exp(k)*k*E1(k).
_ASYMPTOTIC_SWITCH = 600.0


@dataclass(frozen=True)
class AccuracySpec:
    """Absolute/relative tolerance pair for validating numeric routines."""

    abs_tol: float
    rel_tol: float

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")

    def close(self, value: float, reference: float) -> bool:
        return abs(value - reference) <= self.abs_tol + self.rel_tol * abs(reference)


def q_function(x: float) -> float:
    """Standard normal tail probability Q(x) = P(Z > x)."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def exp_integral_e1(z: float) -> float:
    """Exponential integral E1(z) = integral of exp(-t)/t over [z, inf), z > 0."""
    if z <= 0:
        raise ValueError(f"E1 requires z > 0, got {z}")
    return float(special.exp1(z))


def rayleigh_interference_factor(kappa: float) -> float:
    """exp(kappa) * kappa * E1(kappa), the mean of kappa/(kappa + X) for X ~ Exp(1).

    Scales a covert power budget when Rayleigh-faded interference masks the
    warden; rises from 0 (interference-dominated) to 1 (noise-dominated).
    `kappa` is the noise-to-mean-interference ratio.
    """
    if kappa <= 0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if kappa <= _ASYMPTOTIC_SWITCH:
        return math.exp(kappa) * kappa * float(special.exp1(kappa))
    # Alternating asymptotic series 1 - 1/k + 2/k^2 - 6/k^3 + ...; terms shrink
    # fast for kappa this large.
    total, term = 1.0, 1.0
    for k in range(1, 40):
        term *= -k / kappa
        total += term
        if abs(term) < 1e-17 * total:
            break
    return total
