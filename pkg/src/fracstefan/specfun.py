"""Special functions for the time-fractional Stefan problem.

Gamma and the error functions come from :mod:`math`. The Wright function is
summed from its power series at real non-positive arguments, which is all
the similarity solution needs; the Mainardi function and the auxiliary
functions ``g3``, ``f4``, ``f5`` are built on top of it.

At fractional order ``alpha == 1`` the auxiliary functions switch to their
erf/exp closed forms unless ``closed_form=False`` is passed.
"""

import math
import sys
from dataclasses import dataclass

from ._backend import kernels
from .errors import ConvergenceError, DomainError, ValidationError

#: Largest |z| accepted by the Wright/Mainardi series.
Z_MAX = 10.0

_EPS = sys.float_info.epsilon
_SQRT_PI = math.sqrt(math.pi)
# Mainardi values must exceed this multiple of their cancellation error
# estimate before they are used as divisors or factors in solver equations.
_RESOLUTION_FLOOR = 1e8


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the Wright series.

    Summation stops once two consecutive terms are both below
    ``max(abs_tol, rel_tol * |partial sum|)``.
    """

    rel_tol: float = 1e-14
    abs_tol: float = 1e-300
    max_terms: int = 400

    def __post_init__(self):
        if not self.rel_tol > 0 or not self.abs_tol > 0:
            raise ValidationError("rel_tol and abs_tol must be positive")
        if int(self.max_terms) != self.max_terms or self.max_terms < 16:
            raise ValidationError("max_terms must be an integer >= 16")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class WrightParams:
    """Parameters ``(a, b)`` of ``W(z; a, b)``, restricted to ``-1 < a < 0``."""

    a: float
    b: float

    def __post_init__(self):
        if not -1.0 < self.a < 0.0:
            raise ValidationError(f"Wright order a={self.a!r} outside (-1, 0)")
        if not math.isfinite(self.b):
            raise ValidationError("Wright shift b must be finite")


def gamma(x):
    """Gamma function; raises DomainError at 0, -1, -2, ..."""
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"Gamma has a pole at {x!r}")
    return math.gamma(x)


def rgamma(x):
    """Reciprocal Gamma, an entire function: exactly 0 at the Gamma poles."""
    return kernels.rgamma(float(x))


erf = math.erf
erfc = math.erfc


def _check_alpha(alpha):
    if not 0.0 < alpha <= 1.0:
        raise ValidationError(f"fractional order alpha={alpha!r} outside (0, 1]")


def _wright_sum(z, a, b, ctrl, first=0):
    """Return ``(W(z; a, b), error_estimate)``, or the tail from ``n = 1`` on."""
    if z > 0:
        raise DomainError("only real non-positive Wright arguments are supported")
    if -z > Z_MAX:
        raise DomainError(f"|z|={-z!r} exceeds the series accuracy domain {Z_MAX}")
    value, abs_sum, n_terms = kernels.wright_series(
        float(z), a, b, ctrl.rel_tol, ctrl.abs_tol, int(ctrl.max_terms), first
    )
    if n_terms < 0:
        raise ConvergenceError(
            f"Wright series W({z!r}; {a!r}, {b!r}) not converged in "
            f"{ctrl.max_terms} terms"
        )
    # rounding of individual terms is what compensation cannot remove
    return value, 4.0 * _EPS * abs_sum


def wright(z, p, ctrl=DEFAULT_CONTROL):
    """Wright function ``W(z; a, b) = sum z**n / (n! Gamma(a n + b))`` for ``z <= 0``.

    Accuracy degrades towards ``|z| = Z_MAX`` because the series alternates
    and its largest terms grow roughly like ``exp(|z|**(1/(1+a)))``.
    """
    return _wright_sum(z, p.a, p.b, ctrl)[0]


def mainardi(nu, x, ctrl=DEFAULT_CONTROL):
    """Mainardi function ``M_nu(x) = W(-x; -nu, 1 - nu)`` for ``0 < nu < 1``, ``x >= 0``."""
    if not 0.0 < nu < 1.0:
        raise ValidationError(f"Mainardi order nu={nu!r} outside (0, 1)")
    if x < 0:
        raise DomainError("Mainardi function is evaluated at x >= 0 only")
    return _wright_sum(-x, -nu, 1.0 - nu, ctrl)[0]


def mainardi_half(alpha, x, ctrl=DEFAULT_CONTROL, closed_form=True):
    """``M_{alpha/2}(x)``, resolved well enough to be used as a solver factor.

    Raises DomainError when cancellation in the series leaves fewer than
    about eight significant digits.
    """
    _check_alpha(alpha)
    if x < 0:
        raise DomainError("Mainardi function is evaluated at x >= 0 only")
    if alpha == 1.0 and closed_form:
        return math.exp(-0.25 * x * x) / _SQRT_PI
    nu = 0.5 * alpha
    value, err = _wright_sum(-x, -nu, 1.0 - nu, ctrl)
    if not value > _RESOLUTION_FLOOR * err:
        raise DomainError(
            f"M_{nu}({x!r}) = {value!r} is not resolved above series "
            f"round-off {err!r}"
        )
    return value


def g3(alpha, x, ctrl=DEFAULT_CONTROL, closed_form=True):
    """``1 - W(-x; -alpha/2, 1)``: increases from 0 at ``x = 0`` towards 1."""
    _check_alpha(alpha)
    if x < 0:
        raise DomainError("g3 is evaluated at x >= 0 only")
    if alpha == 1.0 and closed_form:
        return math.erf(0.5 * x)
    if x == 0:
        return 0.0
    # 1 - W is minus the series without its n = 0 term, since 1/Gamma(1) = 1
    return -_wright_sum(-x, -0.5 * alpha, 1.0, ctrl, first=1)[0]


def f4(alpha, x, ctrl=DEFAULT_CONTROL, closed_form=True):
    """``x * g3(alpha, x) / M_{alpha/2}(x)``: increases from 0 to infinity."""
    if not x > 0:
        raise DomainError("f4 is evaluated at x > 0 only")
    return x * g3(alpha, x, ctrl, closed_form) / mainardi_half(
        alpha, x, ctrl, closed_form
    )


def f5(alpha, x, ctrl=DEFAULT_CONTROL, closed_form=True):
    """``g3(alpha, x) / x``: decreases from ``1/Gamma(1 - alpha/2)`` to 0."""
    if not x > 0:
        raise DomainError("f5 is evaluated at x > 0 only")
    return g3(alpha, x, ctrl, closed_form) / x
