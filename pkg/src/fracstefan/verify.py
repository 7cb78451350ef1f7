"""Numerical checks of the closed-form solution against the Caputo derivative.

``caputo_l1`` discretizes the Caputo derivative with the L1 scheme
(piecewise-linear interpolation of ``f``). ``pde_residual`` uses it to test
``D^alpha T = lambda**2 T_xx`` at a point inside the melt.

The time-fractional derivative carries memory of the whole history
``[0, t]``. The similarity solution satisfies the diffusion equation as the
closed form continued over every ``x > 0`` with its own limit
``t0 - (t0 - tm) / g3(xi)`` at ``t -> 0``, not with the field clamped to
``tm`` ahead of the front. The residual is therefore computed on that
continued field.
"""

import math

import numpy as np

from . import specfun
from ._backend import kernels
from .errors import DomainError, ValidationError
from .solution import free_boundary


def caputo_l1(samples, dt, alpha):
    """L1 approximation of ``D^alpha f`` at the last sample.

    ``samples[j]`` is ``f(j * dt)``, starting at ``t = 0``. At ``alpha = 1``
    the formula collapses to the backward difference.
    """
    f = np.asarray(samples, dtype=float)
    if f.ndim != 1 or f.size < 2:
        raise ValidationError("need at least 2 samples on a uniform grid")
    if not dt > 0:
        raise ValidationError("time step must be positive")
    if not 0.0 < alpha <= 1.0:
        raise ValidationError(f"alpha={alpha!r} outside (0, 1]")
    return dt ** (-alpha) / math.gamma(2.0 - alpha) * kernels.l1_history_sum(f, alpha)


def caputo_power(beta, alpha, t):
    """Exact ``D^alpha t**beta = Gamma(1+beta) / Gamma(1+beta-alpha) t**(beta-alpha)``."""
    if not (t > 0 and beta > 0 and 0.0 < alpha <= 1.0):
        raise ValidationError("need t > 0, beta > 0, 0 < alpha <= 1")
    return math.gamma(1.0 + beta) / math.gamma(1.0 + beta - alpha) * t ** (beta - alpha)


def l1_errors(beta, alpha, t=1.0, n0=64, levels=4):
    """Absolute L1 errors for ``f = t**beta`` on ``n0 * 2**i`` steps."""
    exact = caputo_power(beta, alpha, t)
    out = []
    for i in range(levels):
        n = n0 * 2**i
        grid = np.linspace(0.0, t, n + 1)
        out.append((n, abs(caputo_l1(grid**beta, t / n, alpha) - exact)))
    return out


def observed_order(errors):
    """Least-squares slope of ``log(error)`` against ``log(1/n)``."""
    n = np.array([e[0] for e in errors], dtype=float)
    err = np.array([e[1] for e in errors], dtype=float)
    return float(np.polyfit(np.log(1.0 / n), np.log(err), 1)[0])


def _continued_temperature(sol, x, t):
    if t == 0:
        return sol.t0 - sol.delta_t / sol._g3_xi
    eta = x / (sol.lambda_ * t ** (0.5 * sol.alpha))
    if eta > specfun.Z_MAX:
        # before the similarity variable enters the series domain the
        # sample is replaced by the t -> 0 limit
        return sol.t0 - sol.delta_t / sol._g3_xi
    return sol.t0 - sol.delta_t * specfun.g3(sol.alpha, eta, sol.ctrl) / sol._g3_xi


def pde_residual(sol, x, t_end, n_steps):
    """Relative residual ``|D^alpha T - lambda**2 T_xx| / |lambda**2 T_xx|`` at ``(x, t_end)``.

    ``D^alpha`` is the L1 scheme on ``n_steps`` uniform steps of ``[0, t_end]``;
    ``T_xx`` is a three-point central difference with ``h = 1e-4 s(t_end)``.
    """
    if n_steps < 1:
        raise ValidationError("n_steps must be >= 1")
    s_end = free_boundary(sol, t_end)
    if not 0 < x < s_end:
        raise DomainError(f"x={x!r} is not inside the melt (0, {s_end!r}) at t_end")
    h = 1e-4 * s_end
    temp = _continued_temperature
    t_xx = (temp(sol, x + h, t_end) - 2.0 * temp(sol, x, t_end)
            + temp(sol, x - h, t_end)) / h**2
    rhs = sol.lambda_**2 * t_xx

    dt = t_end / n_steps
    samples = [temp(sol, x, j * dt) for j in range(n_steps + 1)]
    lhs = caputo_l1(samples, dt, sol.alpha)
    return abs(lhs - rhs) / abs(rhs)


def pde_residual_study(sol, x, t_end, n_steps, levels):
    """Residuals on ``n_steps * 2**i`` steps for ``i < levels``."""
    return [
        (n_steps * 2**i, pde_residual(sol, x, t_end, n_steps * 2**i))
        for i in range(levels)
    ]
