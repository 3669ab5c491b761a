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
Module measuring Zeno errors over a grid of step counts.

"""
import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from zenolab._warnings import EpsilonExceededWarning
from zenolab.exceptions import InvalidInputError

from .bounds import EVALUATORS, BoundKind, bound_parameters
from .instance import ZenoInstance
from .peripheral_maps import zeno_epsilon
from .product import zeno_limit, zeno_product
from .rates import ErrorSeries, SeriesEntry

logger = logging.getLogger(__name__)

BOUND_CHOICES = {
    "none": None,
    "thm1": BoundKind.THM1_EXPLICIT,
    "uniform": BoundKind.UNIFORM_POWER,
    "closed-system": BoundKind.CLOSED_SYSTEM,
}


def _check_grid(n_grid: Sequence[int]) -> list:
    grid = [int(n) for n in n_grid]
    if not grid:
        raise InvalidInputError("The step grid must not be empty.")
    if grid[0] < 1 or any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidInputError("The step grid must be strictly increasing positive integers.")
    return grid


def zeno_error(inst: ZenoInstance, n: int) -> float:
    """‖(Me^{(t/n)L})ⁿ - Σλⱼⁿ e^{tPⱼLPⱼ}Pⱼ‖ in the instance norm."""
    return inst.norm(zeno_product(inst, n) - zeno_limit(inst, n))


def zeno_error_series(
    inst: ZenoInstance,
    n_grid: Sequence[int],
    with_bound: str = "none",
    workers: int = 1,
    delta_tilde: Optional[float] = None,
) -> ErrorSeries:
    """Zeno errors over ``n_grid``, optionally next to an explicit bound.

    Rows inherit the instance flags. With several peripheral eigenvalues, rows whose step
    t/n exceeds :func:`~zenolab.zeno.zeno_epsilon` are flagged ``epsilon-exceeded`` and a
    single EpsilonExceededWarning is emitted for the series.

    Args:
        inst: Zeno instance.
        n_grid: Strictly increasing step counts.
        with_bound: One of ``none``, ``thm1``, ``uniform`` or ``closed-system``.
        workers: Number of threads evaluating grid points.
        delta_tilde: δ̃ of the uniform bound.

    Returns:
        ErrorSeries: one row per step count.

    Raises:
        InvalidInputError: If the grid or bound choice is invalid.
        HypothesisViolationError: If the instance violates the requested bound's hypotheses.
    """
    grid = _check_grid(n_grid)
    if with_bound not in BOUND_CHOICES:
        raise InvalidInputError(
            f"Unknown bound '{with_bound}'; expected one of {', '.join(BOUND_CHOICES)}."
        )
    kind = BOUND_CHOICES[with_bound]
    params = bound_parameters(inst, kind, delta_tilde) if kind is not None else None

    epsilon = None
    if inst.spectrum.num_peripheral > 1:
        epsilon = zeno_epsilon(inst)

    logger.info(
        "Measuring %d grid point(s) for '%s' (bound: %s, workers: %d)",
        len(grid),
        inst.label,
        with_bound,
        workers,
    )
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            errors = list(executor.map(lambda n: zeno_error(inst, n), grid))
    else:
        errors = [zeno_error(inst, n) for n in grid]

    entries, exceeded = [], False
    for n, error in zip(grid, errors):
        flags = list(inst.flags)
        if epsilon is not None and inst.t / n > epsilon:
            flags.append("epsilon-exceeded")
            exceeded = True
        bound = None
        if params is not None:
            bound = EVALUATORS[kind]({**params, "n": n})
        entries.append(SeriesEntry(n=n, error=float(error), bound=bound, flags=tuple(flags)))

    if exceeded:
        warnings.warn(
            f"Some steps t/n of '{inst.label}' exceed the separation radius {epsilon:.6g}.",
            EpsilonExceededWarning,
        )

    metadata = {"norm_kind": inst.norm_kind.value, "bound": with_bound}
    if params is not None:
        metadata["bound_params"] = dict(params)
    if epsilon is not None:
        metadata["epsilon"] = epsilon
    return ErrorSeries(
        entries=tuple(entries), t=inst.t, instance_label=inst.label, metadata=metadata
    )
