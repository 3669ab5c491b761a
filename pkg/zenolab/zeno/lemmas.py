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
Module checking the three estimates whose sum bounds the Zeno error with a single
peripheral eigenvalue 1.

The error ‖(Me^{tL/n})ⁿx - e^{tPLP}Px‖ telescopes through the intermediate products
(Pe^{tL/n}P)ⁿx and e^{nP(e^{tL/n} - 1)P}Px:

* :func:`check_excursion_estimate` compares (Me^{tL/n})ⁿ with (Pe^{tL/n}P)ⁿ by counting the
  excursions out of the range of P.
* :func:`check_chernoff_estimate` compares (Pe^{tL/n}P)ⁿ with its Chernoff exponential.
* :func:`check_exponential_estimate` compares the Chernoff exponential with e^{tPLP}P.

All estimates are stated for unit time; the checkers apply them to the generator tL with
leakage constant tb. Norms are Euclidean on vectors and spectral on operators.

"""
import logging
from typing import NamedTuple, Optional

import numpy as np

from zenolab._inequality import InequalityReport
from zenolab._typing import ComplexMatrix, Vector
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import matrix_exp, operator_norm, vector_norm

from .bounds import E_BTILDE_SAMPLES, check_single_unit_eigenvalue, leakage_constant, power_rate
from .exceptions import HypothesisViolationError
from .instance import ZenoInstance

logger = logging.getLogger(__name__)

PROJECTION_TOL = 1e-8


class LemmaData(NamedTuple):
    """Objects shared by the three estimates, at total time t."""

    p: ComplexMatrix
    generator: ComplexMatrix
    b: float
    delta: float


def lemma_data(inst: ZenoInstance) -> LemmaData:
    """Validate the hypotheses and collect P, tL, tb and δ.

    Raises:
        HypothesisViolationError: If M does not have a single peripheral eigenvalue 1 with a
            norm-one projection P satisfying MP = PM = P and ‖Mⁿ - P‖ ≤ δⁿ, δ < 1.
    """
    check_single_unit_eigenvalue(inst)
    p = inst.spectrum.p_sigma
    norm_p = operator_norm(p)
    if norm_p > 1 + get_tolerances().contraction_tol:
        raise HypothesisViolationError("‖P‖ = 1", f"Found ‖P‖ = {norm_p:.12g}.")
    if max(operator_norm(inst.m @ p - p), operator_norm(p @ inst.m - p)) > PROJECTION_TOL:
        raise HypothesisViolationError("MP = PM = P")
    if not inst.generator.contractive:
        logger.info("Generator of '%s' is not certified contractive", inst.label)

    delta = power_rate(inst, norm=operator_norm)
    b = inst.t * leakage_constant(inst, norm=operator_norm)
    return LemmaData(p=p, generator=inst.t * inst.generator.superoperator, b=b, delta=delta)


def _check_vector(inst: ZenoInstance, x: Optional[Vector]) -> Optional[np.ndarray]:
    if x is None:
        return None
    arr = np.asarray(x, dtype=np.complex128).reshape(-1)
    if arr.size != inst.size or not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"Vector must have {inst.size} finite entries.")
    return arr


def _check_steps(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"Number of steps must be at least 1, got {n}.")


def _measure(a: np.ndarray, x: Optional[np.ndarray]) -> float:
    return operator_norm(a) if x is None else vector_norm(a @ x)


def _step(data: LemmaData, n: int) -> ComplexMatrix:
    return matrix_exp(data.generator / n)


def _compressed_chernoff(data: LemmaData, n: int) -> ComplexMatrix:
    """e^{nP(e^{tL/n} - 1)P}P."""
    p = data.p
    increment = p @ (_step(data, n) - np.eye(p.shape[0])) @ p
    return matrix_exp(n * increment) @ p


def _second_order(data: LemmaData, x: np.ndarray):
    lp = data.generator @ data.p
    return vector_norm(lp @ x), vector_norm(lp @ lp @ x)


def sup_unit_compressed_evolution(data: LemmaData) -> float:
    """Sampled sup_{s ∈ [0, 1]} ‖e^{sPtLP}P‖."""
    compressed = data.p @ data.generator @ data.p
    return max(
        operator_norm(matrix_exp(s * compressed) @ data.p)
        for s in np.linspace(0.0, 1.0, E_BTILDE_SAMPLES)
    )


def check_excursion_estimate(
    inst: ZenoInstance, n: int, x: Optional[Vector] = None
) -> InequalityReport:
    """Excursion estimate ‖(Me^{tL/n})ⁿ - (Pe^{tL/n}P)ⁿ‖.

    rhs = (δⁿ + b/n + (1/n)·b(2 + b)(δ - δⁿ)/(1 - δ)·e^{2b})‖x‖ with b the time-scaled
    leakage constant. The operator-level variant is used when ``x`` is omitted.

    Raises:
        HypothesisViolationError: If the instance violates the hypotheses.
    """
    _check_steps(n)
    data = lemma_data(inst)
    x = _check_vector(inst, x)
    step = _step(data, n)
    full = np.linalg.matrix_power(inst.m @ step, n)
    compressed = np.linalg.matrix_power(data.p @ step @ data.p, n)
    lhs = _measure(full - compressed, x)

    b, delta = data.b, data.delta
    scale = 1.0 if x is None else vector_norm(x)
    tail = b * (2 + b) * (delta - delta**n) / (1 - delta) * np.exp(2 * b)
    rhs = (delta**n + b / n + tail / n) * scale
    return InequalityReport(
        lhs=lhs,
        rhs=float(rhs),
        witness={"lemma": "excursion", "instance": inst.label, "n": n, "b": b, "delta": delta},
    )


def check_chernoff_estimate(inst: ZenoInstance, n: int, x: Vector) -> InequalityReport:
    """Chernoff estimate ‖(Pe^{tL/n}P)ⁿx - e^{nP(e^{tL/n} - 1)P}Px‖.

    rhs = (1/2n)(b²‖x‖ + b‖tLPx‖ + ‖(tLP)²x‖).
    """
    _check_steps(n)
    data = lemma_data(inst)
    x = _check_vector(inst, x)
    step = _step(data, n)
    compressed = np.linalg.matrix_power(data.p @ step @ data.p, n)
    lhs = vector_norm(compressed @ x - _compressed_chernoff(data, n) @ x)

    first, second = _second_order(data, x)
    b = data.b
    rhs = (b**2 * vector_norm(x) + b * first + second) / (2 * n)
    return InequalityReport(
        lhs=lhs,
        rhs=float(rhs),
        witness={"lemma": "chernoff", "instance": inst.label, "n": n, "b": b},
    )


def check_exponential_estimate(inst: ZenoInstance, n: int, x: Vector) -> InequalityReport:
    """Exponential estimate ‖e^{nP(e^{tL/n} - 1)P}Px - e^{tPLP}Px‖.

    rhs = (e^{b̃}/2n)(b²‖x‖ + ‖(tLP)²x‖) with e^{b̃} = sup_{s ∈ [0, 1]} ‖e^{sPtLP}P‖
    sampled on 64 points.
    """
    _check_steps(n)
    data = lemma_data(inst)
    x = _check_vector(inst, x)
    p = data.p
    limit = matrix_exp(p @ data.generator @ p) @ p
    lhs = vector_norm(_compressed_chernoff(data, n) @ x - limit @ x)

    e_btilde = sup_unit_compressed_evolution(data)
    _, second = _second_order(data, x)
    b = data.b
    rhs = e_btilde * (b**2 * vector_norm(x) + second) / (2 * n)
    return InequalityReport(
        lhs=lhs,
        rhs=float(rhs),
        witness={
            "lemma": "exponential",
            "instance": inst.label,
            "n": n,
            "b": b,
            "e_btilde": e_btilde,
        },
    )


def check_telescoping(inst: ZenoInstance, n: int, x: Vector) -> InequalityReport:
    """Total Zeno error on ``x`` against the sum of the three telescoping differences.

    lhs = ‖(Me^{tL/n})ⁿx - e^{tPLP}Px‖ and rhs is the sum of the left sides of
    :func:`check_excursion_estimate`, :func:`check_chernoff_estimate` and
    :func:`check_exponential_estimate`.
    """
    parts = [
        check_excursion_estimate(inst, n, x).lhs,
        check_chernoff_estimate(inst, n, x).lhs,
        check_exponential_estimate(inst, n, x).lhs,
    ]
    data = lemma_data(inst)
    x = _check_vector(inst, x)
    p = data.p
    full = np.linalg.matrix_power(inst.m @ _step(data, n), n)
    limit = matrix_exp(p @ data.generator @ p) @ p
    lhs = vector_norm(full @ x - limit @ x)
    return InequalityReport(
        lhs=lhs,
        rhs=float(sum(parts)),
        witness={"check": "telescoping", "instance": inst.label, "n": n, "parts": parts},
    )
