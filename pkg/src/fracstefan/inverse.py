"""The four inverse cases: recover one of c, ell, k, rho from over-specified data.

With temperature ``t0`` and flux coefficient ``q0`` both prescribed at the
fixed face, the similarity solution ``s(t) = lambda * xi * t**(alpha/2)``
ties the dimensionless front coefficient ``xi`` to the thermal
coefficients through two algebraic relations::

    k (t0 - tm) / (lambda q0 Gamma(1 - alpha/2)) = g3(xi)
    c (t0 - tm) Gamma(1 - alpha/2) / (ell Gamma(1 + alpha/2)) = f4(xi)

with ``lambda**2 = k / (rho c)``. Each case eliminates the unknown
coefficient to get one monotone equation in ``xi``, solves it by
bisection, then back-substitutes.
"""

import enum
import math
from dataclasses import dataclass, fields, replace
from typing import NamedTuple, Optional

from . import specfun
from .errors import RestrictionError, ValidationError
from .roots import solve_monotone
from .specfun import DEFAULT_CONTROL

DEFAULT_TOL = 1e-12


class UnknownCoefficient(enum.Enum):
    """Which thermal coefficient is unknown."""

    C = "c"
    ELL = "ell"
    K = "k"
    RHO = "rho"

    @property
    def case_number(self):
        return _CASE_NUMBERS[self]

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValidationError(
                f"unknown coefficient must be one of c, ell, k, rho; got {value!r}"
            ) from None


_CASE_NUMBERS = {
    UnknownCoefficient.C: 1,
    UnknownCoefficient.ELL: 2,
    UnknownCoefficient.K: 3,
    UnknownCoefficient.RHO: 4,
}


@dataclass(frozen=True)
class ThermalData:
    """Physical data of the melting problem.

    Any of ``k, rho, c, ell, q0`` may be None when it is the quantity being
    determined. ``q0`` carries units of flux times ``time**(alpha/2)``.
    All quantities must be in one consistent unit system.
    """

    alpha: float
    t0: float
    tm: float
    k: Optional[float] = None
    rho: Optional[float] = None
    c: Optional[float] = None
    ell: Optional[float] = None
    q0: Optional[float] = None

    @property
    def delta_t(self):
        return self.t0 - self.tm

    def validate(self, required=()):
        """Check invariants; ``required`` names fields that must be present."""
        if not (isinstance(self.alpha, (int, float)) and 0.0 < self.alpha <= 1.0):
            raise ValidationError(f"alpha={self.alpha!r} must lie in (0, 1]")
        for name in ("t0", "tm"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite")
        if not self.t0 > self.tm:
            raise ValidationError(f"t0={self.t0!r} must exceed tm={self.tm!r}")
        for name in ("k", "rho", "c", "ell", "q0"):
            value = getattr(self, name)
            if value is None:
                if name in required:
                    raise ValidationError(f"'{name}' is required")
                continue
            if not (math.isfinite(value) and value > 0):
                raise ValidationError(f"'{name}'={value!r} must be positive and finite")
        return self

    def known_for(self, case):
        """Validate as input for ``case`` and drop the field being determined."""
        case = UnknownCoefficient.parse(case)
        required = [n for n in ("k", "rho", "c", "ell", "q0") if n != case.value]
        return replace(self, **{case.value: None}).validate(required)

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class InverseSolution:
    case: UnknownCoefficient
    xi: float
    coefficient: float
    lambda_: float
    restriction_margin: float


class ForwardSolution(NamedTuple):
    xi: float
    q0: float
    lambda_: float


def _gammas(alpha):
    return specfun.gamma(1.0 + 0.5 * alpha), specfun.gamma(1.0 - 0.5 * alpha)


def restriction(case, d):
    """Dimensionless restriction expression; the case is solvable iff it is < 1.

    Cases k and rho are solvable for any data and return 0.
    """
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    g_plus, g_minus = _gammas(d.alpha)
    if case is UnknownCoefficient.C:
        return d.k * d.rho * d.ell * d.delta_t * g_plus / (d.q0**2 * g_minus)
    if case is UnknownCoefficient.ELL:
        return math.sqrt(d.rho * d.c * d.k) * d.delta_t / (d.q0 * g_minus)
    return 0.0


def stefan_target(alpha, c, ell, delta_t):
    """Right-hand side of ``f4(xi) = c dT Gamma(1-alpha/2) / (ell Gamma(1+alpha/2))``."""
    g_plus, g_minus = _gammas(alpha)
    return c * delta_t * g_minus / (ell * g_plus)


def solve_xi(case, d, tol=DEFAULT_TOL, ctrl=DEFAULT_CONTROL, closed_form=True):
    """Solve the case's monotone equation for ``xi``.

    Raises RestrictionError when the data admit no solution.
    """
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    margin = restriction(case, d)
    if not margin < 1.0:
        raise RestrictionError(case.value, margin)
    alpha = d.alpha
    g_plus, g_minus = _gammas(alpha)

    if case is UnknownCoefficient.C:
        # g3 * M / x falls from 1/Gamma(1-alpha/2)**2 to 0; margin < 1 puts
        # the target below the starting value
        target = (
            d.k * d.rho * d.ell * d.delta_t * g_plus / (d.q0**2 * g_minus**3)
        )

        def func(x):
            return specfun.f5(alpha, x, ctrl, closed_form) * specfun.mainardi_half(
                alpha, x, ctrl, closed_form
            )

        return solve_monotone(func, target, increasing=False, tol=tol)

    if case is UnknownCoefficient.ELL:
        return solve_monotone(
            lambda x: specfun.g3(alpha, x, ctrl, closed_form),
            margin,
            increasing=True,
            tol=tol,
        )

    return solve_monotone(
        lambda x: specfun.f4(alpha, x, ctrl, closed_form),
        stefan_target(alpha, d.c, d.ell, d.delta_t),
        increasing=True,
        tol=tol,
    )


def recover_coefficient(case, d, xi, ctrl=DEFAULT_CONTROL, closed_form=True):
    """Back-substitute a solved ``xi`` to get the unknown coefficient."""
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    alpha, dt = d.alpha, d.delta_t
    g_plus, g_minus = _gammas(alpha)
    if case is UnknownCoefficient.C:
        return d.ell * g_plus * specfun.f4(alpha, xi, ctrl, closed_form) / (
            dt * g_minus
        )
    if case is UnknownCoefficient.ELL:
        return d.c * dt * g_minus / (g_plus * specfun.f4(alpha, xi, ctrl, closed_form))
    flux_sq = (d.q0 * g_minus * specfun.g3(alpha, xi, ctrl, closed_form)) ** 2
    if case is UnknownCoefficient.K:
        return flux_sq / (d.rho * d.c * dt**2)
    return flux_sq / (d.k * d.c * dt**2)


def recover_lambda(case, d, xi, coefficient, ctrl=DEFAULT_CONTROL, closed_form=True):
    """Diffusion-scale coefficient ``lambda`` from each case's own closed form.

    All four agree with ``sqrt(k / (rho c))`` once the recovered coefficient
    is substituted.
    """
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    alpha, dt = d.alpha, d.delta_t
    g_plus, g_minus = _gammas(alpha)
    if case is UnknownCoefficient.C:
        lam_sq = (
            d.k
            * dt
            * g_minus
            * specfun.mainardi_half(alpha, xi, ctrl, closed_form)
            / (d.rho * d.ell * g_plus * xi * specfun.g3(alpha, xi, ctrl, closed_form))
        )
        return math.sqrt(lam_sq)
    if case is UnknownCoefficient.ELL:
        return math.sqrt(d.k / (d.rho * d.c))
    g3 = specfun.g3(alpha, xi, ctrl, closed_form)
    if case is UnknownCoefficient.K:
        return d.q0 * g_minus * g3 / (d.rho * d.c * dt)
    return d.k * dt / (d.q0 * g_minus * g3)


def solve_case(case, d, tol=DEFAULT_TOL, ctrl=DEFAULT_CONTROL, closed_form=True):
    """Gate on the restriction, solve for ``xi``, recover coefficient and ``lambda``."""
    case = UnknownCoefficient.parse(case)
    d = d.known_for(case)
    margin = restriction(case, d)
    xi = solve_xi(case, d, tol, ctrl, closed_form)
    coefficient = recover_coefficient(case, d, xi, ctrl, closed_form)
    lam = recover_lambda(case, d, xi, coefficient, ctrl, closed_form)
    return InverseSolution(case, xi, coefficient, lam, margin)


def forward_problem(d, tol=DEFAULT_TOL, ctrl=DEFAULT_CONTROL, closed_form=True):
    """With all four coefficients known, compute ``xi`` and the flux coefficient ``q0``.

    This generates consistent over-specified data for round-trip checks.
    """
    d.validate(required=("k", "rho", "c", "ell"))
    alpha = d.alpha
    xi = solve_monotone(
        lambda x: specfun.f4(alpha, x, ctrl, closed_form),
        stefan_target(alpha, d.c, d.ell, d.delta_t),
        increasing=True,
        tol=tol,
    )
    lam = math.sqrt(d.k / (d.rho * d.c))
    g_minus = specfun.gamma(1.0 - 0.5 * alpha)
    q0 = d.k * d.delta_t / (lam * g_minus * specfun.g3(alpha, xi, ctrl, closed_form))
    return ForwardSolution(xi, q0, lam)
