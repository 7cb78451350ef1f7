"""Determination of one unknown thermal coefficient through the one-phase
time-fractional Lame-Clapeyron-Stefan problem."""

from ._backend import BACKEND
from .errors import (
    ConvergenceError,
    DomainError,
    FracStefanError,
    RestrictionError,
    ValidationError,
)

__version__ = "0.1.0"
