import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracstefan import specfun
from fracstefan.errors import ConvergenceError, DomainError, ValidationError
from fracstefan.specfun import SeriesControl, WrightParams

from oracles import erf_maclaurin, f4_ref, g3_ref, mainardi_ref, wright_ref

ALPHAS = [0.25, 0.5, 0.75, 0.99]
GRID = np.linspace(0.05, 5.0, 100)


def test_series_control_validation():
    with pytest.raises(ValidationError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(ValidationError):
        SeriesControl(max_terms=8)


@pytest.mark.parametrize("a", [0.0, -1.0, 0.3])
def test_wright_params_reject_order(a):
    with pytest.raises(ValidationError):
        WrightParams(a, 1.0)


# gamma / rgamma / erf -------------------------------------------------------

@pytest.mark.parametrize("x, expected", [
    (1.0, 1.0),
    (0.5, 1.7724538509055160),
    (1.5, 0.8862269254527580),
])
def test_gamma_values(x, expected):
    assert specfun.gamma(x) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("x", [0, -1, -2, -7])
def test_gamma_pole(x):
    with pytest.raises(DomainError):
        specfun.gamma(x)


@pytest.mark.parametrize("x, expected", [(0, 0.0), (-3, 0.0), (2, 1.0)])
def test_rgamma_values(x, expected):
    assert specfun.rgamma(x) == expected


@given(st.floats(min_value=-9.9, max_value=10.0).filter(
    lambda x: x > 1e-3 or abs(x - round(x)) > 1e-3))
def test_rgamma_times_gamma_is_one(x):
    assert specfun.rgamma(x) * specfun.gamma(x) == pytest.approx(1.0, abs=1e-12)


def test_erf_values():
    assert specfun.erf(0.0) == 0.0
    assert specfun.erf(30.0) == 1.0
    # frozen from the Maclaurin oracle
    assert specfun.erf(1.0) == pytest.approx(0.8427007929497149, rel=1e-12)


@pytest.mark.parametrize("x", np.linspace(-3.0, 3.0, 13))
def test_erf_against_maclaurin(x):
    assert specfun.erf(x) == pytest.approx(erf_maclaurin(x), rel=1e-12, abs=1e-15)
    assert specfun.erf(x) + specfun.erfc(x) == pytest.approx(1.0, abs=2e-16)


# Wright / Mainardi ----------------------------------------------------------

@pytest.mark.parametrize("b", [1.0, 0.5, 2.5])
def test_wright_at_zero(b):
    assert specfun.wright(0.0, WrightParams(-0.3, b)) == pytest.approx(1 / math.gamma(b))


@pytest.mark.parametrize("z, expected", [
    (-1.0, 0.4795001221869535),   # erfc(1/2)
    (-2.0, 0.1572992070502851),   # erfc(1)
])
def test_wright_erfc_points(z, expected):
    assert specfun.wright(z, WrightParams(-0.5, 1.0)) == pytest.approx(expected, abs=1e-13)


def test_wright_erfc_identity_sweep():
    p = WrightParams(-0.5, 1.0)
    for x in np.linspace(0.0, 5.0, 501):
        assert abs(specfun.wright(-x, p) - math.erfc(x / 2)) < 1e-10


@pytest.mark.parametrize("a, b, z", [
    (-0.15, 1.0, -4.0), (-0.35, 0.65, -2.5), (-0.45, 1.0, -6.0), (-0.495, 0.505, -7.0),
])
def test_wright_against_multiprecision(a, b, z):
    value, err = specfun._wright_sum(z, a, b, specfun.DEFAULT_CONTROL)
    assert value == specfun.wright(z, WrightParams(a, b))
    # the reported round-off estimate must bound the true error
    assert abs(value - wright_ref(z, a, b)) <= err


def test_wright_domain_errors():
    p = WrightParams(-0.5, 1.0)
    with pytest.raises(DomainError):
        specfun.wright(-10.5, p)
    with pytest.raises(DomainError):
        specfun.wright(0.5, p)
    with pytest.raises(ConvergenceError):
        specfun.wright(-8.0, p, SeriesControl(max_terms=16))


def test_mainardi_values():
    assert specfun.mainardi(0.3, 0.0) == pytest.approx(1 / math.gamma(0.7))
    assert specfun.mainardi(0.5, 1.0) == pytest.approx(0.4393912894677224, abs=1e-13)
    assert specfun.mainardi(0.5, 2.0) == pytest.approx(0.2075537487102974, abs=1e-13)


def test_mainardi_half_closed_form_sweep():
    for x in np.linspace(0.0, 5.0, 501):
        closed = math.exp(-x * x / 4) / math.sqrt(math.pi)
        assert abs(specfun.mainardi(0.5, x) - closed) < 1e-10


@pytest.mark.parametrize("nu", [0.0, 1.0, -0.2])
def test_mainardi_rejects_order(nu):
    with pytest.raises(ValidationError):
        specfun.mainardi(nu, 1.0)


def test_mainardi_half_refuses_unresolved_values():
    # at alpha near 1 the series loses all digits well before |z| = 10
    with pytest.raises(DomainError):
        specfun.mainardi_half(0.99, 9.5)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("x", [0.5, 3.0, 7.0])
def test_g3_and_mainardi_against_multiprecision(alpha, x):
    g_err = specfun._wright_sum(-x, -alpha / 2, 1.0, specfun.DEFAULT_CONTROL, first=1)[1]
    m_err = specfun._wright_sum(-x, -alpha / 2, 1 - alpha / 2, specfun.DEFAULT_CONTROL)[1]
    assert abs(specfun.g3(alpha, x) - g3_ref(alpha, x)) <= g_err
    assert abs(specfun.mainardi(alpha / 2, x) - mainardi_ref(alpha / 2, x)) <= m_err
    if x <= 3.0:
        assert specfun.mainardi(alpha / 2, x) == pytest.approx(
            mainardi_ref(alpha / 2, x), rel=1e-12)


# auxiliary functions --------------------------------------------------------

def test_g3_accurate_near_zero():
    # no cancellation against the constant term
    for alpha in ALPHAS:
        x = 1e-12
        assert specfun.g3(alpha, x) == pytest.approx(x / math.gamma(1 - alpha / 2), rel=1e-10)


def test_g3_endpoints():
    assert specfun.g3(0.4, 0.0) == 0.0
    assert specfun.g3(1.0, 2.0) == pytest.approx(0.8427007929497149, rel=1e-14)
    for alpha in (0.5, 0.75, 0.99):
        assert specfun.g3(alpha, specfun.Z_MAX) > 0.99


def test_g3_series_path_at_alpha_one():
    for x in np.linspace(0.0, 5.0, 51):
        assert specfun.g3(1.0, x, closed_form=False) == pytest.approx(
            math.erf(x / 2), abs=1e-13)


def test_f4_values():
    assert specfun.f4(1.0, 2.0) == pytest.approx(8.120313877114820, rel=1e-13)
    assert specfun.f4(0.6, 1e-7) < 1e-12
    for alpha, x in [(0.3, 1.7), (0.8, 2.9)]:
        assert specfun.f4(alpha, x) == pytest.approx(f4_ref(alpha, x), rel=1e-10)


@pytest.mark.parametrize("mu", [0.1, 0.5, 1.0, 1.7, 2.4])
def test_f4_alpha_one_identity(mu):
    expected = 2 * math.sqrt(math.pi) * mu * math.exp(mu * mu) * math.erf(mu)
    assert specfun.f4(1.0, 2 * mu) == pytest.approx(expected, rel=1e-13)
    assert specfun.f4(1.0, 2 * mu, closed_form=False) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_f5_limits(alpha):
    assert specfun.f5(alpha, 1e-9) == pytest.approx(1 / math.gamma(1 - alpha / 2), abs=1e-8)
    assert specfun.f5(alpha, specfun.Z_MAX) < 0.1
    assert specfun.f5(1.0, 2.0) == pytest.approx(0.42135039647485745, rel=1e-14)


def test_aux_domain_errors():
    with pytest.raises(DomainError):
        specfun.f4(0.5, 0.0)
    with pytest.raises(DomainError):
        specfun.f5(0.5, -1.0)
    with pytest.raises(ValidationError):
        specfun.g3(1.2, 1.0)


# monotonicity and calculus identities -----------------------------------------

@pytest.mark.parametrize("alpha", ALPHAS)
def test_monotonicity_on_grid(alpha):
    w = [specfun.wright(-x, WrightParams(-alpha / 2, 1.0)) for x in GRID]
    m = [specfun.mainardi(alpha / 2, x) for x in GRID]
    g = [specfun.g3(alpha, x) for x in GRID]
    f4 = [specfun.f4(alpha, x) for x in GRID]
    f5 = [specfun.f5(alpha, x) for x in GRID]
    assert np.all(np.diff(w) < 0)
    assert np.all(np.diff(m) < 0)
    assert np.all(np.diff(g) > 0)
    assert np.all(np.diff(f4) > 0)
    assert np.all(np.diff(f5) < 0)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_g3_derivative_is_mainardi(alpha):
    h = 1e-4
    for x in np.linspace(0.1, 4.0, 40):
        fd = (specfun.g3(alpha, x + h) - specfun.g3(alpha, x - h)) / (2 * h)
        assert fd == pytest.approx(specfun.mainardi(alpha / 2, x), rel=1e-6)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_g3_exceeds_tangent_bound(alpha):
    for x in GRID:
        assert specfun.g3(alpha, x) > x * specfun.mainardi(alpha / 2, x)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.05, max_value=1.0), st.floats(min_value=0.0, max_value=6.0))
def test_g3_in_unit_interval(alpha, x):
    assert 0.0 <= specfun.g3(alpha, x) < 1.0
