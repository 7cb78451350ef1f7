"""Explicit similarity solution: temperature, gradient, front and profiles."""

import math
from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .errors import DomainError, ValidationError
from .inverse import InverseSolution, ThermalData, forward_problem
from .specfun import DEFAULT_CONTROL


@dataclass(frozen=True)
class StefanSolution:
    """Fully resolved melting problem: every coefficient known and ``xi`` solved."""

    alpha: float
    lambda_: float
    xi: float
    t0: float
    tm: float
    q0: float
    k: float
    rho: float
    c: float
    ell: float
    ctrl: specfun.SeriesControl = field(default=DEFAULT_CONTROL, repr=False)

    def __post_init__(self):
        if not (self.xi > 0 and self.lambda_ > 0 and self.t0 > self.tm):
            raise ValidationError("need xi > 0, lambda > 0 and t0 > tm")
        object.__setattr__(self, "_g3_xi", specfun.g3(self.alpha, self.xi, self.ctrl))
        if not self._g3_xi > 0:
            raise ValidationError("g3(alpha, xi) must be positive")

    @classmethod
    def from_data(cls, d: ThermalData, ctrl=DEFAULT_CONTROL):
        """Solve the forward problem for fully specified data."""
        fwd = forward_problem(d, ctrl=ctrl)
        return cls(d.alpha, fwd.lambda_, fwd.xi, d.t0, d.tm, fwd.q0,
                   d.k, d.rho, d.c, d.ell, ctrl)

    @classmethod
    def from_inverse(cls, d: ThermalData, inv: InverseSolution, ctrl=DEFAULT_CONTROL):
        """Combine the known data with a solved inverse case."""
        values = d.as_dict()
        values[inv.case.value] = inv.coefficient
        return cls(d.alpha, inv.lambda_, inv.xi, d.t0, d.tm, values["q0"],
                   values["k"], values["rho"], values["c"], values["ell"], ctrl)

    @property
    def delta_t(self):
        return self.t0 - self.tm


def _scale(sol, t):
    if not t > 0:
        raise DomainError(f"time must be positive, got {t!r}")
    return sol.lambda_ * t ** (0.5 * sol.alpha)


def free_boundary(sol, t):
    """Front position ``s(t) = lambda * xi * t**(alpha/2)``."""
    return _scale(sol, t) * sol.xi


def temperature(sol, x, t):
    """Temperature at ``(x, t)``; exactly ``tm`` beyond the front."""
    if x < 0:
        raise DomainError("x must be non-negative")
    scale = _scale(sol, t)
    if x > scale * sol.xi:
        return sol.tm
    eta = x / scale
    return sol.t0 - sol.delta_t * specfun.g3(sol.alpha, eta, sol.ctrl) / sol._g3_xi


def temperature_gradient(sol, x, t):
    """``dT/dx`` inside the melt, ``0 <= x <= s(t)``."""
    scale = _scale(sol, t)
    if not 0 <= x <= scale * sol.xi:
        raise DomainError(f"x={x!r} outside the melt region [0, s(t)]")
    m = specfun.mainardi_half(sol.alpha, x / scale, sol.ctrl)
    return -sol.delta_t * m / (sol._g3_xi * scale)


def stefan_residual(sol, t):
    """Relative mismatch of the energy balance at the front.

    Compares the conductive flux ``-k T_x(s(t), t)`` with the latent-heat
    term ``rho ell D^alpha s(t)``, using the Caputo power rule for
    ``D^alpha t**(alpha/2)``.
    """
    s = free_boundary(sol, t)
    lhs = -sol.k * temperature_gradient(sol, s, t)
    half = 0.5 * sol.alpha
    rhs = (
        sol.rho * sol.ell * sol.lambda_ * sol.xi
        * specfun.gamma(1.0 + half) / specfun.gamma(1.0 - half)
        * t ** (-half)
    )
    return abs(lhs - rhs) / rhs


@dataclass(frozen=True)
class GridSpec:
    times: np.ndarray
    positions: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        positions = np.asarray(self.positions, dtype=float)
        if times.ndim != 1 or positions.ndim != 1:
            raise ValidationError("grid axes must be one-dimensional")
        if times.size < 2 or positions.size < 2:
            raise ValidationError("grid needs at least 2 times and 2 positions")
        if not (np.all(times > 0) and np.all(np.diff(times) > 0)):
            raise ValidationError("times must be positive and strictly ascending")
        if not (np.all(positions >= 0) and np.all(np.diff(positions) > 0)):
            raise ValidationError("positions must be non-negative and strictly ascending")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "positions", positions)

    @classmethod
    def uniform(cls, xmax, tmax, nx, nt):
        """``nx`` positions on ``[0, xmax]`` and ``nt`` times on ``(0, tmax]``."""
        if not (xmax > 0 and tmax > 0):
            raise ValidationError("xmax and tmax must be positive")
        if nx < 2 or nt < 2:
            raise ValidationError("nx and nt must be at least 2")
        return cls(np.linspace(tmax / nt, tmax, nt), np.linspace(0.0, xmax, nx))


@dataclass(frozen=True)
class Profile:
    """Sampled field: ``temperatures[i, j]`` is T at ``(positions[j], times[i])``."""

    times: np.ndarray
    positions: np.ndarray
    temperatures: np.ndarray
    front: np.ndarray
    clamped: int = 0


def emit_profile(sol, grid):
    """Sample the temperature field and the front on ``grid``.

    Series round-off that would push T outside ``[tm, t0]`` is clamped;
    the number of clamped samples is recorded in ``Profile.clamped``.
    """
    if not isinstance(grid, GridSpec):
        raise ValidationError("grid must be a GridSpec")
    temps = np.empty((grid.times.size, grid.positions.size))
    front = np.empty(grid.times.size)
    for i, t in enumerate(grid.times):
        front[i] = free_boundary(sol, t)
        for j, x in enumerate(grid.positions):
            temps[i, j] = temperature(sol, x, t)
    clipped = np.clip(temps, sol.tm, sol.t0)
    clamped = int(np.count_nonzero(clipped != temps))
    return Profile(grid.times, grid.positions, clipped, front, clamped)
