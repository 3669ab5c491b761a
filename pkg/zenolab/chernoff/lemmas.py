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
Module checking Chernoff-type estimates of powers of contractions against exponentials.

"""
import logging

import numpy as np

from zenolab._inequality import InequalityReport
from zenolab._typing import ComplexMatrix, MatrixFunction, Vector
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import as_complex_matrix, matrix_exp, operator_norm, vector_norm
from zenolab.zeno.exceptions import HypothesisViolationError

logger = logging.getLogger(__name__)

GRID_POINTS = 32
GRID_SPAN = 1e-3
MAP_TOL = 1e-8


def _check_contraction(c: np.ndarray, name: str = "c") -> None:
    size = operator_norm(c)
    if size > 1 + get_tolerances().contraction_tol:
        raise InvalidInputError(f"{name} is not a contraction (norm {size:.12g}).")


def _check_steps(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidInputError(f"Number of steps must be a positive integer, got {n}.")
    return int(n)


def _prepare(c, n: int, x: Vector):
    arr = as_complex_matrix(c, "c", square=True)
    _check_contraction(arr)
    n = _check_steps(n)
    vec = np.asarray(x, dtype=np.complex128).reshape(-1)
    if vec.size != arr.shape[0]:
        raise InvalidInputError(f"Vector must have {arr.shape[0]} entries, got {vec.size}.")
    return arr, n, vec


def _power_minus_exponential(c: np.ndarray, n: int, x: np.ndarray) -> float:
    identity = np.eye(c.shape[0])
    power = np.linalg.matrix_power(c, n)
    return vector_norm(power @ x - matrix_exp(n * (c - identity)) @ x)


def chernoff_sqrt_n(c, n: int, x: Vector) -> InequalityReport:
    """Check ‖cⁿx - e^{n(c - 1)}x‖ ≤ √n‖(c - 1)x‖ for a contraction c.

    Raises:
        InvalidInputError: If ``c`` is not a contraction or ``n`` < 1.
    """
    arr, n, vec = _prepare(c, n, x)
    lhs = _power_minus_exponential(arr, n, vec)
    rhs = np.sqrt(n) * vector_norm((arr - np.eye(arr.shape[0])) @ vec)
    return InequalityReport(lhs=lhs, rhs=float(rhs), witness={"lemma": "sqrt-n", "n": n})


def chernoff_modified(c, n: int, x: Vector) -> InequalityReport:
    """Check ‖(cⁿ - e^{n(c - 1)})x‖ ≤ (n/2)‖(c - 1)²x‖ for a contraction c.

    Raises:
        InvalidInputError: If ``c`` is not a contraction or ``n`` < 1.
    """
    arr, n, vec = _prepare(c, n, x)
    lhs = _power_minus_exponential(arr, n, vec)
    shifted = arr - np.eye(arr.shape[0])
    rhs = n / 2 * vector_norm(shifted @ (shifted @ vec))
    return InequalityReport(lhs=lhs, rhs=float(rhs), witness={"lemma": "modified", "n": n})


def sample_grid(n: int) -> np.ndarray:
    """Geometric grid of 32 points from 10⁻³/n to 1/n."""
    return np.geomspace(GRID_SPAN / n, 1.0 / n, GRID_POINTS)


def chernoff_approx_modified(
    c_map: MatrixFunction,
    p_map: MatrixFunction,
    p,
    v: float,
    w: float,
    n: int,
) -> InequalityReport:
    """Check the modified Chernoff estimate for maps C(t), P(t) close to a projection P.

    With C = C(1/n) and Q = P(1/n),

    ‖Cⁿ - e^{n(C - Q)}Q‖ ≤ (n/2)e^{v+w}‖(C - Q)²‖ ≤ (w²/2n)e^{v+w}.

    The hypotheses ‖P‖ = 1, P(t)² = P(t), P(t)C(t) = C(t)P(t) = C(t), ‖P(t) - P‖ ≤ tv and
    ‖C(t) - P(t)‖ ≤ tw are sampled on a 32-point geometric grid of t ending at 1/n. The
    intermediate tier is reported in the witness under ``tier``.

    Raises:
        HypothesisViolationError: If a sampled hypothesis fails; the error names it.
    """
    n = _check_steps(n)
    projection = as_complex_matrix(p, "p", square=True)
    if v < 0 or w < 0:
        raise InvalidInputError(f"Constants v and w must be nonnegative, got v = {v}, w = {w}.")
    norm_p = operator_norm(projection)
    if abs(norm_p - 1) > get_tolerances().contraction_tol:
        raise HypothesisViolationError("‖P‖ = 1", f"Found ‖P‖ = {norm_p:.12g}.")

    for t in sample_grid(n):
        p_t = as_complex_matrix(p_map(t), "p_map(t)", square=True)
        c_t = as_complex_matrix(c_map(t), "c_map(t)", square=True)
        if operator_norm(p_t @ p_t - p_t) > MAP_TOL:
            raise HypothesisViolationError("P(t)² = P(t)", f"Fails at t = {t:.6g}.")
        if max(operator_norm(p_t @ c_t - c_t), operator_norm(c_t @ p_t - c_t)) > MAP_TOL:
            raise HypothesisViolationError("P(t)C(t) = C(t)P(t) = C(t)", f"Fails at t = {t:.6g}.")
        if operator_norm(p_t - projection) > t * v + MAP_TOL:
            raise HypothesisViolationError("‖P(t) - P‖ ≤ tv", f"Fails at t = {t:.6g}.")
        if operator_norm(c_t - p_t) > t * w + MAP_TOL:
            raise HypothesisViolationError("‖C(t) - P(t)‖ ≤ tw", f"Fails at t = {t:.6g}.")

    c_n = as_complex_matrix(c_map(1.0 / n), "c_map(1/n)", square=True)
    p_n = as_complex_matrix(p_map(1.0 / n), "p_map(1/n)", square=True)
    gap = c_n - p_n
    lhs = operator_norm(np.linalg.matrix_power(c_n, n) - matrix_exp(n * gap) @ p_n)
    tier = n / 2 * np.exp(v + w) * operator_norm(gap @ gap)
    rhs = w**2 / (2 * n) * np.exp(v + w)
    logger.debug("Approximate Chernoff check at n = %d: lhs = %.3e, tier = %.3e", n, lhs, tier)
    return InequalityReport(
        lhs=lhs,
        rhs=float(rhs),
        witness={"lemma": "approx-modified", "n": n, "v": v, "w": w, "tier": float(tier)},
    )


def product_formula_bound(f: MatrixFunction, l, t: float, n: int) -> InequalityReport:
    """Check ‖f(t/n)ⁿ - e^{tl}‖ ≤ ‖n(f(t/n) - 1) - tl‖ + (n/2)‖f(t/n) - 1‖².

    ``f`` must be a contraction-valued map with f(0) = 1; contractivity is sampled on a
    32-point geometric grid ending at t/n.

    Raises:
        InvalidInputError: If f(0) is not the identity, a sample of ``f`` is not a
            contraction, or ``n`` < 1.
    """
    n = _check_steps(n)
    generator = as_complex_matrix(l, "l", square=True)
    identity = np.eye(generator.shape[0])
    if operator_norm(as_complex_matrix(f(0.0), "f(0)") - identity) > MAP_TOL:
        raise InvalidInputError("f(0) must be the identity.")
    for s in t * sample_grid(n):
        _check_contraction(as_complex_matrix(f(s), "f(s)"), name=f"f({s:.6g})")

    step = as_complex_matrix(f(t / n), "f(t/n)", square=True)
    lhs = operator_norm(np.linalg.matrix_power(step, n) - matrix_exp(t * generator))
    shifted = step - identity
    rhs = operator_norm(n * shifted - t * generator) + n / 2 * operator_norm(shifted) ** 2
    return InequalityReport(
        lhs=lhs, rhs=float(rhs), witness={"proposition": "product-formula", "t": t, "n": n}
    )
