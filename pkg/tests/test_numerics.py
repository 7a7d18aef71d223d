"""Special functions against quadrature oracles and classical bounds."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from covertcast import AccuracySpec, exp_integral_e1, q_function, rayleigh_interference_factor


def e1_quadrature(z: float) -> float:
    """Independent oracle: adaptive quadrature of the defining integral."""
    val, _ = integrate.quad(lambda t: math.exp(-t) / t, z, np.inf, limit=200)
    return val


# ---------------------------------------------------------------------------
# Q-function
# ---------------------------------------------------------------------------


def test_q_function_reference_values():
    assert q_function(0.0) == pytest.approx(0.5, abs=1e-15)
    assert q_function(1.96) == pytest.approx(0.0249979, abs=1e-6)
    assert q_function(40.0) < 1e-300


def test_q_function_symmetry():
    for x in (-3.7, -1.0, 0.0, 0.3, 2.5, 7.0):
        assert q_function(x) + q_function(-x) == pytest.approx(1.0, abs=1e-12)


def test_q_function_monotone_and_bounded():
    xs = np.linspace(-8.0, 8.0, 101)
    vals = [q_function(float(x)) for x in xs]
    assert all(0.0 <= v <= 1.0 for v in vals)
    assert all(b <= a for a, b in zip(vals, vals[1:]))


def test_q_function_matches_empirical_tail():
    rng = np.random.default_rng(2024)
    z = rng.standard_normal(1_000_000)
    for x in (0.5, 1.0, 2.0):
        emp = float(np.mean(z > x))
        se = math.sqrt(emp * (1.0 - emp) / z.size)
        assert abs(q_function(x) - emp) <= 3.0 * se


# ---------------------------------------------------------------------------
# Exponential integral
# ---------------------------------------------------------------------------


def test_e1_reference_values():
    assert exp_integral_e1(1.0) == pytest.approx(0.2193839, abs=1e-7)
    assert exp_integral_e1(10.0) == pytest.approx(4.15697e-6, rel=1e-5)


@pytest.mark.parametrize("z", [0.05, 0.3, 1.0, 2.5, 10.0, 30.0])
def test_e1_matches_quadrature(z):
    assert exp_integral_e1(z) == pytest.approx(e1_quadrature(z), rel=1e-10)


@pytest.mark.parametrize("z", [0.0, -1.0, -1e-12])
def test_e1_rejects_nonpositive(z):
    with pytest.raises(ValueError):
        exp_integral_e1(z)


def test_e1_strictly_decreasing_positive():
    zs = np.geomspace(0.01, 50.0, 60)
    vals = [exp_integral_e1(float(z)) for z in zs]
    assert all(v > 0 for v in vals)
    assert all(b < a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("z", [0.1, 1.0, 10.0])
def test_e1_classical_bracket(z):
    val = exp_integral_e1(z)
    assert math.exp(-z) / (z + 1.0) < val < math.exp(-z) / z


@pytest.mark.parametrize("z", [0.5, 1.0, 2.0, 5.0])
def test_e1_derivative_identity(z):
    h = 1e-4
    fd = (exp_integral_e1(z + h) - exp_integral_e1(z - h)) / (2.0 * h)
    assert fd == pytest.approx(-math.exp(-z) / z, abs=1e-6)


# ---------------------------------------------------------------------------
# Interference factor
# ---------------------------------------------------------------------------


def test_interference_factor_reference_values():
    # independent route: e * E1(1) from the quadrature oracle
    assert rayleigh_interference_factor(1.0) == pytest.approx(0.5963474, abs=1e-7)
    assert rayleigh_interference_factor(1.0) == pytest.approx(math.e * e1_quadrature(1.0), rel=1e-10)
    asym = 1.0 - 1.0 / 100.0 + 2.0 / 100.0**2
    assert rayleigh_interference_factor(100.0) == pytest.approx(asym, abs=1e-4)
    assert rayleigh_interference_factor(1e-6) < 2e-5


def test_interference_factor_domain_and_limits():
    with pytest.raises(ValueError):
        rayleigh_interference_factor(0.0)
    with pytest.raises(ValueError):
        rayleigh_interference_factor(-2.0)
    assert rayleigh_interference_factor(1e7) == pytest.approx(1.0, abs=1e-6)


def test_interference_factor_strictly_increasing():
    ks = np.geomspace(1e-5, 1e4, 80)
    vals = [rayleigh_interference_factor(float(k)) for k in ks]
    assert all(0.0 < v < 1.0 for v in vals)
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_interference_factor_series_branch_matches_direct_product():
    # just above the switch the series must agree with the direct product,
    # which is still representable there
    from scipy import special

    kappa = 600.1
    direct = math.exp(kappa) * kappa * float(special.exp1(kappa))
    assert rayleigh_interference_factor(kappa) == pytest.approx(direct, rel=1e-10)


@given(st.floats(min_value=1e-6, max_value=1e3))
def test_interference_factor_bracket(kappa):
    val = rayleigh_interference_factor(kappa)
    assert kappa / (kappa + 1.0) < val < 1.0


# ---------------------------------------------------------------------------
# AccuracySpec
# ---------------------------------------------------------------------------


def test_accuracy_spec():
    spec = AccuracySpec(abs_tol=1e-9, rel_tol=1e-6)
    assert spec.close(1.0000005, 1.0)
    assert not spec.close(1.1, 1.0)
    with pytest.raises(ValueError):
        AccuracySpec(abs_tol=0.0, rel_tol=1e-6)
    with pytest.raises(ValueError):
        AccuracySpec(abs_tol=1e-9, rel_tol=-1.0)
