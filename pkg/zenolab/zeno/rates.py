# Copyright (C) 2024 zenolab Development Team
#
# This file is part of zenolab
#
# zenolab is free software released under the GNU General Public License v3
# or later. You can redistribute and/or modify it under the terms of the GPL v3.
# See the LICENSE file in the project root or <https://www.gnu.org/licenses/gpl-3.0.html>.
#
# THERE IS NO WARRANTY for zenolab, as per Section 15 of the GPL v3.

"""
Module defining error series and the log-log rate fit used to measure convergence orders.

"""
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError

from .exceptions import TooFewPointsError

MIN_FIT_POINTS = 4


@dataclass(frozen=True)
class SeriesEntry:
    """Measured error at one step count, with optional bound and row flags."""

    n: int
    error: float
    bound: Optional[float] = None
    flags: Tuple[str, ...] = ()

    @property
    def slack(self) -> Optional[float]:
        """Returns ``bound - error``, or None without a bound."""
        return None if self.bound is None else self.bound - self.error


@dataclass(frozen=True)
class ErrorSeries:
    """Errors of a product formula over a grid of step counts.

    Args:
        entries: Rows ordered by strictly increasing ``n``.
        t: Total evolution time.
        instance_label: Name of the instance the series was measured on.
        metadata: Extra information such as bound constants or the norm kind.

    Raises:
        InvalidInputError: If ``n`` is not strictly increasing or an error is not finite.
    """

    entries: Tuple[SeriesEntry, ...]
    t: float
    instance_label: str
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        previous = 0
        for entry in self.entries:
            if entry.n <= previous:
                raise InvalidInputError("Series step counts must be strictly increasing.")
            if not math.isfinite(entry.error) or entry.error < 0:
                raise InvalidInputError(f"Series error at n = {entry.n} is {entry.error}.")
            previous = entry.n

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def n_values(self) -> List[int]:
        """Step counts of the series."""
        return [entry.n for entry in self.entries]

    @property
    def errors(self) -> List[float]:
        """Measured errors of the series."""
        return [entry.error for entry in self.entries]

    def dominated(self, tol: Optional[float] = None) -> bool:
        """Returns True if every bounded row satisfies ``error <= bound + tol``."""
        tol = get_tolerances().slack_tol if tol is None else tol
        return all(entry.slack >= -tol for entry in self.entries if entry.bound is not None)


@dataclass(frozen=True)
class RateFit:
    """Least-squares line through (log n, log error).

    Args:
        slope: Fitted convergence order; -1 for an O(1/n) rate.
        intercept: Fitted log prefactor.
        r_squared: Coefficient of determination of the fit.
        window: Range (n_min, n_max) the fit was restricted to.
        points: Number of points used.
    """

    slope: float
    intercept: float
    r_squared: float
    window: Tuple[int, int]
    points: int = 0

    def to_dict(self) -> Dict[str, Any]:
        """Returns a JSON-friendly dictionary of the fit."""
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "window": list(self.window),
            "points": self.points,
        }


def rate_fit(series: ErrorSeries, window: Optional[Tuple[int, int]] = None) -> RateFit:
    """Fit log(error) = slope·log(n) + intercept over a window of step counts.

    Points with error at or below the configured error floor are ignored.

    Args:
        series: Series to fit.
        window: Inclusive range (n_min, n_max); the whole series when omitted.

    Returns:
        RateFit: slope, intercept and R² of the fit.

    Raises:
        TooFewPointsError: If fewer than four usable points lie in the window.
    """
    floor = get_tolerances().error_floor
    if window is None:
        n_values = series.n_values or [1]
        window = (min(n_values), max(n_values))
    n_min, n_max = window

    points = [
        (entry.n, entry.error)
        for entry in series.entries
        if n_min <= entry.n <= n_max and entry.error > floor
    ]
    if len(points) < MIN_FIT_POINTS:
        raise TooFewPointsError(len(points), MIN_FIT_POINTS)

    log_n = np.log([n for n, _ in points])
    log_err = np.log([err for _, err in points])
    slope, intercept = np.polyfit(log_n, log_err, 1)

    residual = log_err - (slope * log_n + intercept)
    total = float(np.sum((log_err - log_err.mean()) ** 2))
    r_squared = 1.0 if total == 0.0 else 1.0 - float(np.sum(residual**2)) / total

    return RateFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        window=(int(n_min), int(n_max)),
        points=len(points),
    )
