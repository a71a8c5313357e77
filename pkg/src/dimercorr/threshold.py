"""Threshold temperatures where the thermal concurrence vanishes.

At zero field the concurrence of the anisotropic dimer dies at the
temperature solving  gamma = (T/2) ln(e^{2/T} - 2)  (temperatures in units
of J).  The right-hand side decreases strictly from 1 toward -infinity on
(0, 2/ln 2), so a bracketed bisection is enough.  For arbitrary parameters
the threshold is located numerically from the concurrence itself.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .correlations import concurrence
from .exceptions import DomainError
from .models import ModelParams, thermal_state

__all__ = [
    "ThresholdPoint",
    "threshold_curve",
    "tth_anisotropic",
    "tth_numeric",
]

_T_SUPPORT = 2.0 / math.log(2.0)  # e^{2/T} - 2 changes sign here
_RESIDUAL_TOL = 1e-10
_POSITIVE_C = 1e-12


@dataclass(frozen=True)
class ThresholdPoint:
    """One point of a threshold curve; ``degenerate`` marks the gamma = 1 limit."""

    gamma: float
    b1: float
    b2: float
    t_th: float
    degenerate: bool = False


def _vanishing_rhs(t: float) -> float:
    """(t/2) ln(e^{2/t} - 2), via log1p so it is finite and overflow-free."""
    if t >= _T_SUPPORT:
        return -math.inf
    return 1.0 + 0.5 * t * math.log1p(-2.0 * math.exp(-2.0 / t))


def tth_anisotropic(gamma: float) -> float:
    """Zero-field threshold temperature, in units of J.

    Solves gamma = (T/2) ln(e^{2/T} - 2) by bisection on [1e-3, 10] until
    the residual drops below 1e-10.  gamma = 1 is the degenerate limit and
    returns 0 directly (the state never entangles there).
    """
    if not -1.0 <= gamma <= 1.0:
        raise DomainError(f"gamma must lie in [-1, 1], got {gamma}")
    if gamma == 1.0:
        return 0.0
    lo, hi = 1e-3, 10.0
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        residual = _vanishing_rhs(mid) - gamma
        if abs(residual) < _RESIDUAL_TOL:
            return mid
        if residual > 0.0:
            lo = mid
        else:
            hi = mid
    return mid


def threshold_curve(gammas: Sequence[float]) -> list[ThresholdPoint]:
    """tth_anisotropic applied pointwise; strictly decreasing for ascending gammas."""
    points = []
    for g in gammas:
        g = float(g)
        points.append(
            ThresholdPoint(gamma=g, b1=0.0, b2=0.0, t_th=tth_anisotropic(g), degenerate=g == 1.0)
        )
    return points


def tth_numeric(p: ModelParams, t_max: float, *, scan_points: int = 200) -> float | None:
    """Largest temperature in (0, t_max] where the concurrence turns off.

    A coarse scan over ``scan_points`` temperatures locates positive-to-zero
    transitions of the thermal concurrence; the largest one is refined by
    bisection to a width of 1e-8.  Returns None when no transition exists in
    the range.  Multiple transitions trigger a warning and the largest is
    returned.
    """
    if t_max <= 0:
        raise DomainError(f"t_max must be positive, got {t_max}")
    if scan_points < 2:
        raise ValueError(f"scan_points must be at least 2, got {scan_points}")
    grid = np.linspace(t_max / scan_points, t_max, scan_points)
    positive = [concurrence(thermal_state(p, float(t))) > _POSITIVE_C for t in grid]
    transitions = [i for i in range(scan_points - 1) if positive[i] and not positive[i + 1]]
    if not transitions:
        return None
    if len(transitions) > 1:
        warnings.warn(
            "concurrence turns off more than once in the scan range; "
            "returning the largest transition temperature",
            stacklevel=2,
        )
    lo, hi = float(grid[transitions[-1]]), float(grid[transitions[-1] + 1])
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if concurrence(thermal_state(p, mid)) > _POSITIVE_C:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
