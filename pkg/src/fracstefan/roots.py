"""Bracketing bisection for monotone scalar equations on ``x > 0``."""

from .errors import ConvergenceError, DomainError
from .specfun import Z_MAX

LOWER_START = 1e-8
UPPER_START = 1.0
_LOWER_MIN = 1e-200


def solve_monotone(func, target, increasing, tol=1e-12, x_max=Z_MAX, max_iter=400):
    """Find ``x > 0`` with ``func(x) == target`` for a strictly monotone ``func``.

    The bracket starts at ``[1e-8, 1]``. Its lower end shrinks while the
    target is not yet crossed there; its upper end doubles until it is,
    never beyond ``x_max``. If ``func`` raises DomainError at a trial upper
    end the step is halved back towards the last good point.

    Iteration stops when ``|func(x) - target| <= tol * max(1, |target|)`` or
    the bracket is narrower than ``1e-13 * max(1, x)``.
    """
    sign = 1.0 if increasing else -1.0

    def g(x):
        return sign * (func(x) - target)

    lo = LOWER_START
    while g(lo) > 0:
        lo *= 1e-2
        if lo < _LOWER_MIN:
            raise ConvergenceError("root lies below the smallest admissible bracket")

    hi = min(UPPER_START, x_max)
    bad = x_max * (1.0 + 1e-15)
    while True:
        try:
            g_hi = g(hi)
        except DomainError as exc:
            bad = hi
            hi = 0.5 * (lo + bad)
            if bad - lo <= 1e-12 * bad:
                raise DomainError(
                    f"root lies beyond x={lo!r}, the edge of the accurate "
                    f"special-function domain ({exc})"
                ) from exc
            continue
        if g_hi >= 0:
            break
        lo = hi
        if hi >= x_max or bad - hi <= 1e-12 * bad:
            raise DomainError(
                f"root lies beyond x={hi!r}, the edge of the accurate "
                f"special-function domain"
            )
        step = min(2.0 * hi, x_max)
        hi = step if step < bad else 0.5 * (hi + bad)

    res_tol = tol * max(1.0, abs(target))
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if abs(g_mid) <= res_tol or hi - lo < 1e-13 * max(1.0, mid):
            return mid
        if g_mid < 0:
            lo = mid
        else:
            hi = mid
    raise ConvergenceError(f"bisection did not converge in {max_iter} iterations")
