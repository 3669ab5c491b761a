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
Module computing Zeno products (M e^{(t/n)L})ⁿ and their limits Σ λⱼⁿ e^{tPⱼLPⱼ}Pⱼ.

"""
import numpy as np

from zenolab._typing import ComplexMatrix
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import matrix_exp
from zenolab.semigroups import evolve

from .instance import ZenoInstance


def _check_steps(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidInputError(f"Number of steps must be a positive integer, got {n}.")
    return int(n)


def zeno_step(inst: ZenoInstance, n: int) -> ComplexMatrix:
    """Single Zeno step M e^{(t/n)L}."""
    n = _check_steps(n)
    return inst.m @ evolve(inst.generator, inst.t / n)


def zeno_product(inst: ZenoInstance, n: int) -> ComplexMatrix:
    """Zeno product (M e^{(t/n)L})ⁿ.

    The power is evaluated by binary decomposition of ``n`` (repeated squaring).

    Args:
        inst: Zeno instance.
        n: Number of steps, at least one.

    Raises:
        InvalidInputError: If ``n`` is not a positive integer.
    """
    step = zeno_step(inst, n)
    return np.linalg.matrix_power(step, int(n))


def naive_zeno_product(inst: ZenoInstance, n: int) -> ComplexMatrix:
    """Zeno product by ``n`` sequential multiplications."""
    step = zeno_step(inst, n)
    result = np.eye(inst.size, dtype=np.complex128)
    for _ in range(int(n)):
        result = step @ result
    return result


def zeno_limit(inst: ZenoInstance, n: int) -> ComplexMatrix:
    """Asymptotic Zeno dynamics Σⱼ λⱼⁿ e^{tPⱼLPⱼ}Pⱼ.

    With a single peripheral eigenvalue λ₁ = 1 this is e^{tPLP}P.

    Raises:
        InvalidInputError: If the instance has no peripheral spectrum.
    """
    n = _check_steps(n)
    spectrum = inst.spectrum
    if spectrum.num_peripheral == 0:
        raise InvalidInputError(f"Instance '{inst.label}' has an empty peripheral spectrum.")

    superop = inst.generator.superoperator
    result = np.zeros((inst.size, inst.size), dtype=np.complex128)
    for lam, projection in zip(spectrum.eigenvalues, spectrum.projections):
        compressed = projection @ superop @ projection
        result += lam**n * (matrix_exp(inst.t * compressed) @ projection)
    return result
