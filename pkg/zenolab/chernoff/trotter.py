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
Module measuring the Trotter product (e^{l₁/n}e^{l₂/n})ⁿ against e^{l₁+l₂}.

"""
import logging
from typing import Sequence

import numpy as np

from zenolab.exceptions import InvalidInputError
from zenolab.linalg import matrix_exp, operator_norm
from zenolab.semigroups import GeneratorSpec
from zenolab.zeno.rates import ErrorSeries, SeriesEntry

logger = logging.getLogger(__name__)


def _check_pair(l1: GeneratorSpec, l2: GeneratorSpec) -> None:
    if l1.size != l2.size:
        raise InvalidInputError(
            f"Generators act on different dimensions ({l1.size} and {l2.size})."
        )
    for name, spec in (("l1", l1), ("l2", l2)):
        if not spec.contractive:
            raise InvalidInputError(f"Generator {name} is not certified contractive.")


def trotter_error(l1: GeneratorSpec, l2: GeneratorSpec, n: int) -> float:
    """‖(e^{l₁/n}e^{l₂/n})ⁿ - e^{l₁+l₂}‖."""
    a, b = l1.superoperator, l2.superoperator
    step = matrix_exp(a / n) @ matrix_exp(b / n)
    return operator_norm(np.linalg.matrix_power(step, n) - matrix_exp(a + b))


def trotter_envelope(l1: GeneratorSpec, l2: GeneratorSpec, n: int) -> float:
    """Envelope (1/n)(‖l₁‖‖l₂‖ + 2‖l₁‖² + 2‖l₂‖²) + (n/2)‖e^{l₁/n}e^{l₂/n} - 1‖²."""
    _check_pair(l1, l2)
    norm_a, norm_b = l1.norm(), l2.norm()
    step = matrix_exp(l1.superoperator / n) @ matrix_exp(l2.superoperator / n)
    increment = operator_norm(step - np.eye(l1.size))
    return (norm_a * norm_b + 2 * norm_a**2 + 2 * norm_b**2) / n + n / 2 * increment**2


def trotter_rate(l1: GeneratorSpec, l2: GeneratorSpec, n_grid: Sequence[int]) -> ErrorSeries:
    """Trotter errors over ``n_grid`` with :func:`trotter_envelope` as the bound column.

    Raises:
        InvalidInputError: If the generators act on different dimensions or are not
            contraction generators.
    """
    _check_pair(l1, l2)
    entries = []
    for n in n_grid:
        n = int(n)
        if n < 1:
            raise InvalidInputError(f"Number of steps must be at least 1, got {n}.")
        entries.append(
            SeriesEntry(n=n, error=trotter_error(l1, l2, n), bound=trotter_envelope(l1, l2, n))
        )
    logger.info("Measured Trotter errors on %d grid point(s)", len(entries))
    return ErrorSeries(entries=tuple(entries), t=1.0, instance_label="trotter")
