"""Parameter sweeps over temperature, anisotropy and fields.

A sweep evaluates the full correlation report on a one- or two-axis grid.
Rows are produced in row-major order (axis 1 outer, axis 2 inner) and the
output is deterministic for a fixed spec regardless of how many worker
threads evaluate the grid.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np
from scipy.signal import find_peaks

from .correlations import CorrelationReport, report
from .exceptions import DomainError
from .models import ModelParams, thermal_state

__all__ = [
    "AXIS_NAMES",
    "Axis",
    "SweepRow",
    "SweepSpec",
    "SweepTable",
    "count_peaks",
    "detect_quantum_exceeds_classical",
    "detect_zero_plateau",
    "run_sweep",
]

# Fields of (params, T) each axis writes; two axes must not overlap.
_AXIS_TARGETS = {
    "T": frozenset({"T"}),
    "gamma": frozenset({"gamma"}),
    "b1": frozenset({"b1"}),
    "b2": frozenset({"b2"}),
    "b_uniform": frozenset({"b1", "b2"}),
    "b_anti": frozenset({"b1", "b2"}),
}
AXIS_NAMES = tuple(_AXIS_TARGETS)

_COLUMNS = ("total", "quantum", "classical", "concurrence")


@dataclass(frozen=True)
class Axis:
    """An inclusive linear grid over one sweep variable."""

    name: str
    start: float
    stop: float
    points: int

    def __post_init__(self) -> None:
        if self.name not in _AXIS_TARGETS:
            raise ValueError(f"unknown axis {self.name!r}; choose from {', '.join(AXIS_NAMES)}")
        if self.points < 2:
            raise ValueError(f"axis {self.name!r} needs at least 2 points, got {self.points}")
        if not self.start < self.stop:
            raise ValueError(f"axis {self.name!r} needs start < stop, got {self.start}:{self.stop}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class SweepSpec:
    """Base parameters plus one or two axes to scan.

    ``temp`` is the fixed temperature used when no T axis is present.
    """

    base: ModelParams
    axis1: Axis
    axis2: Axis | None = None
    temp: float | None = None

    def __post_init__(self) -> None:
        axes = [self.axis1] + ([self.axis2] if self.axis2 is not None else [])
        if self.axis2 is not None:
            if self.axis1.name == self.axis2.name:
                raise ValueError("sweep axes must have distinct names")
            if _AXIS_TARGETS[self.axis1.name] & _AXIS_TARGETS[self.axis2.name]:
                raise ValueError(
                    f"axes {self.axis1.name!r} and {self.axis2.name!r} write the same field"
                )
        has_t_axis = any(a.name == "T" for a in axes)
        if has_t_axis:
            t_axis = next(a for a in axes if a.name == "T")
            if t_axis.start <= 0:
                raise DomainError("temperature grid must be strictly positive")
        elif self.temp is None:
            raise ValueError("a sweep without a T axis needs a fixed temp")
        elif self.temp <= 0:
            raise DomainError(f"temperature must be positive, got {self.temp}")


@dataclass(frozen=True)
class SweepRow:
    """One resolved grid point and its correlation report."""

    t: float
    gamma: float
    b1: float
    b2: float
    report: CorrelationReport


@dataclass(frozen=True)
class SweepTable:
    """Sweep output: row-major rows aligned with the axis value arrays."""

    spec: SweepSpec
    axis1_values: np.ndarray
    axis2_values: np.ndarray | None
    rows: list[SweepRow]

    @property
    def is_1d(self) -> bool:
        return self.axis2_values is None

    def column(self, name: str) -> np.ndarray:
        if name not in _COLUMNS:
            raise ValueError(f"unknown column {name!r}; choose from {', '.join(_COLUMNS)}")
        return np.array([getattr(row.report, name) for row in self.rows])


def _apply_axis(params: ModelParams, t: float, name: str, value: float) -> tuple[ModelParams, float]:
    if name == "T":
        return params, value
    if name == "gamma":
        return replace(params, gamma=value), t
    if name == "b1":
        return replace(params, b1=value), t
    if name == "b2":
        return replace(params, b2=value), t
    if name == "b_uniform":
        return replace(params, b1=value, b2=value), t
    return replace(params, b1=value, b2=-value), t  # b_anti


def _evaluate(task: tuple[ModelParams, float]) -> CorrelationReport:
    params, t = task
    return report(thermal_state(params, t))


def run_sweep(spec: SweepSpec, threads: int | None = None) -> SweepTable:
    """Evaluate the grid and assemble rows in row-major order.

    ``threads`` caps the worker-thread count (default: logical processor
    count).  Every grid point is an independent pure computation, so the
    table is identical for any thread count.
    """
    axis1_values = spec.axis1.values()
    axis2_values = spec.axis2.values() if spec.axis2 is not None else None
    base_t = spec.temp if spec.temp is not None else 1.0  # overwritten by any T axis

    tasks: list[tuple[ModelParams, float]] = []
    for v1 in axis1_values:
        params, t = _apply_axis(spec.base, base_t, spec.axis1.name, float(v1))
        if axis2_values is None:
            tasks.append((params, t))
            continue
        for v2 in axis2_values:
            tasks.append(_apply_axis(params, t, spec.axis2.name, float(v2)))

    if threads is None:
        threads = os.cpu_count() or 1
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(_evaluate, tasks))
    else:
        reports = [_evaluate(task) for task in tasks]

    rows = [
        SweepRow(t=t, gamma=params.gamma, b1=params.b1, b2=params.b2, report=rep)
        for (params, t), rep in zip(tasks, reports)
    ]
    return SweepTable(spec=spec, axis1_values=axis1_values, axis2_values=axis2_values, rows=rows)


def _require_1d(table: SweepTable) -> None:
    if not table.is_1d:
        raise ValueError("this analysis needs a one-axis sweep")


def _runs_to_intervals(axis_values: np.ndarray, mask: np.ndarray) -> list[tuple[float, float]]:
    intervals = []
    start = None
    for i, flag in enumerate(mask):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            intervals.append((float(axis_values[start]), float(axis_values[i - 1])))
            start = None
    if start is not None:
        intervals.append((float(axis_values[start]), float(axis_values[len(mask) - 1])))
    return intervals


def detect_quantum_exceeds_classical(table: SweepTable) -> list[tuple[float, float]]:
    """Maximal axis intervals where quantum > classical + 1e-12."""
    _require_1d(table)
    mask = table.column("quantum") > table.column("classical") + 1e-12
    return _runs_to_intervals(table.axis1_values, mask)


def count_peaks(table: SweepTable, column: str, min_prominence: float = 0.01) -> int:
    """Number of interior local maxima of ``column`` with the given prominence."""
    _require_1d(table)
    peaks, _ = find_peaks(table.column(column), prominence=min_prominence)
    return int(peaks.size)


def detect_zero_plateau(table: SweepTable, column: str) -> list[tuple[float, float]]:
    """Maximal axis intervals where ``column`` stays at zero (<= 1e-10)."""
    _require_1d(table)
    mask = table.column(column) <= 1e-10
    return _runs_to_intervals(table.axis1_values, mask)
