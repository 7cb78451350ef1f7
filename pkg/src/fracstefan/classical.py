"""Classical (alpha = 1) inverse solutions and the alpha -> 1 limit check.

Everything here uses only erf, exp and sqrt(pi); no Wright series. The
classical front is written ``s(t) = 2 lambda mu sqrt(t)``, so ``mu``
corresponds to ``xi / 2`` of the fractional solution at ``alpha = 1``.
"""

import math
from dataclasses import dataclass

from .errors import RestrictionError, ValidationError
from .inverse import DEFAULT_TOL, ThermalData, UnknownCoefficient, solve_case
from .roots import solve_monotone

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ClassicalSolution:
    case: UnknownCoefficient
    mu: float
    coefficient: float
    lambda_: float


def classical_restriction(case, d):
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    if case is UnknownCoefficient.C:
        return d.k * d.rho * d.ell * d.delta_t / (2.0 * d.q0**2)
    if case is UnknownCoefficient.ELL:
        return d.delta_t / d.q0 * math.sqrt(d.rho * d.c * d.k / math.pi)
    return 0.0


def erfinv(y, tol=1e-15):
    """Inverse error function on ``(0, 1)`` by bisection over :func:`math.erf`."""
    if not 0.0 < y < 1.0:
        raise ValidationError("erfinv is only needed on (0, 1)")
    return solve_monotone(math.erf, y, increasing=True, tol=tol, x_max=6.0)


def _decay(x):
    # erf(x) exp(-x^2) / x, decreasing from 2/sqrt(pi)
    return math.erf(x) * math.exp(-x * x) / x


def _growth(x):
    return x * math.exp(x * x) * math.erf(x)


def solve_classical(case, d, tol=DEFAULT_TOL):
    """Solve one of the four cases of the classical one-phase problem."""
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    if d.alpha != 1.0:
        raise ValidationError("the classical solution needs alpha == 1")
    margin = classical_restriction(case, d)
    if not margin < 1.0:
        raise RestrictionError(case.value, margin)
    dt = d.delta_t

    if case is UnknownCoefficient.C:
        target = d.k * d.rho * d.ell * dt / (d.q0**2 * _SQRT_PI)
        mu = solve_monotone(_decay, target, increasing=False, tol=tol, x_max=6.0)
        erf_mu = math.erf(mu)
        coefficient = math.pi * d.q0**2 * erf_mu**2 / (d.rho * d.k * dt**2)
        lam = d.k * dt / (d.q0 * _SQRT_PI * erf_mu)
    elif case is UnknownCoefficient.ELL:
        mu = erfinv(margin, tol)
        coefficient = d.q0 * math.sqrt(d.c / (d.rho * d.k)) * math.exp(-mu * mu) / mu
        lam = math.sqrt(d.k / (d.rho * d.c))
    else:
        target = d.c * dt / (d.ell * _SQRT_PI)
        mu = solve_monotone(_growth, target, increasing=True, tol=tol, x_max=6.0)
        erf_mu = math.erf(mu)
        if case is UnknownCoefficient.K:
            coefficient = math.pi * d.q0**2 * erf_mu**2 / (d.rho * d.c * dt**2)
            lam = d.q0 * math.exp(-mu * mu) / (d.rho * d.ell * mu)
        else:
            coefficient = math.pi * d.q0**2 * erf_mu**2 / (d.k * d.c * dt**2)
            lam = d.k * dt / (d.q0 * _SQRT_PI * erf_mu)
    return ClassicalSolution(case, mu, coefficient, lam)


@dataclass(frozen=True)
class LimitRow:
    alpha: float
    xi: float
    two_mu: float
    xi_gap: float
    coeff_gap: float


def limit_compare(case, d, alphas, tol=DEFAULT_TOL):
    """Compare fractional solutions at each order in ``alphas`` with ``alpha = 1``.

    The fractional solves run on the Wright series path even at
    ``alpha = 1``, so the gap there measures series against closed form.
    ``coeff_gap`` is relative to the classical coefficient.
    """
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    ref = solve_classical(case, ThermalData(**{**d.as_dict(), "alpha": 1.0}), tol)
    rows = []
    for alpha in alphas:
        frac = solve_case(
            case, ThermalData(**{**d.as_dict(), "alpha": float(alpha)}), tol,
            closed_form=False,
        )
        rows.append(LimitRow(
            float(alpha),
            frac.xi,
            2.0 * ref.mu,
            abs(frac.xi - 2.0 * ref.mu),
            abs(frac.coefficient - ref.coefficient) / ref.coefficient,
        ))
    return rows
