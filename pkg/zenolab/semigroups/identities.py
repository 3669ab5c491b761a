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
Module containing semigroup evolution and numerical checks of the integral
equation and perturbation bound for semigroups.

"""
import logging
import math

import numpy as np

from zenolab._inequality import InequalityReport
from zenolab._typing import ComplexMatrix
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import as_complex_matrix, matrix_exp, operator_norm

from .generator import CERTIFICATE_TIMES, GeneratorSpec

logger = logging.getLogger(__name__)

GAUSS_LEGENDRE_PANEL = 16


def evolve(g: GeneratorSpec, t: float) -> ComplexMatrix:
    """Returns e^{tL} for the generator ``g``.

    Raises:
        InvalidInputError: If ``t`` is negative.
    """
    if t < 0:
        raise InvalidInputError(f"Evolution time must be nonnegative, got t = {t}.")
    if t == 0:
        return np.eye(g.size, dtype=np.complex128)
    return matrix_exp(t * g.superoperator)


def _check_same_size(k: GeneratorSpec, l: GeneratorSpec) -> None:
    if k.size != l.size:
        raise InvalidInputError(
            f"Generators act on spaces of different dimension: {k.size} and {l.size}."
        )


def check_integral_equation(
    k: GeneratorSpec, l: GeneratorSpec, t: float, quad_points: int = 64
) -> float:
    """Residual of e^{tK} - e^{tL} = ∫₀ᵗ e^{sK}(K - L)e^{(t-s)L} ds.

    The integral is evaluated with composite Gauss-Legendre quadrature: ``quad_points`` nodes
    in total, split as evenly as possible over panels of at most 16 nodes.

    Args:
        k: First generator.
        l: Second generator.
        t: Upper integration limit.
        quad_points: Total number of quadrature nodes.

    Returns:
        float: operator norm of the difference between both sides.

    Raises:
        InvalidInputError: On mismatched dimensions, negative ``t`` or ``quad_points < 1``.
    """
    _check_same_size(k, l)
    if t < 0:
        raise InvalidInputError(f"Integration limit must be nonnegative, got t = {t}.")
    if quad_points < 1:
        raise InvalidInputError(f"quad_points must be positive, got {quad_points}.")

    panels = math.ceil(quad_points / GAUSS_LEGENDRE_PANEL)
    sizes = [quad_points // panels + (panel < quad_points % panels) for panel in range(panels)]
    width = t / panels
    difference = k.superoperator - l.superoperator

    integral = np.zeros((k.size, k.size), dtype=np.complex128)
    for panel, order in enumerate(sizes):
        start = panel * width
        nodes, weights = np.polynomial.legendre.leggauss(order)
        for node, weight in zip(nodes, weights):
            s = start + (node + 1) * width / 2
            integrand = evolve(k, s) @ difference @ evolve(l, t - s)
            integral += (weight * width / 2) * integrand

    residual = operator_norm(evolve(k, t) - evolve(l, t) - integral)
    logger.debug("Integral equation residual %.3e with %d node(s)", residual, quad_points)
    return residual


def check_perturbation_bound(l: GeneratorSpec, a, w: float, t: float) -> InequalityReport:
    """Check ‖e^{t(L+A)} - e^{tL}‖ ≤ e^{tw}(e^{t‖A‖} - 1) for a quasi-contractive semigroup.

    Args:
        l: Generator with ‖e^{sL}‖ ≤ e^{sw}.
        a: Bounded perturbation of the same size as ``l``.
        w: Growth bound of the semigroup.
        t: Evolution time.

    Returns:
        InequalityReport: measured and bounded difference of the two semigroups.

    Raises:
        InvalidInputError: If the growth bound fails on the sampled times, or on a size mismatch.
    """
    perturbation = as_complex_matrix(a, "a", square=True)
    if perturbation.shape[0] != l.size:
        raise InvalidInputError(
            f"Perturbation has dimension {perturbation.shape[0]}, generator {l.size}."
        )
    if t < 0:
        raise InvalidInputError(f"Evolution time must be nonnegative, got t = {t}.")

    tol = get_tolerances().contraction_tol
    for s in sorted(set(CERTIFICATE_TIMES) | {t}):
        growth = operator_norm(evolve(l, s))
        if growth > np.exp(s * w) * (1 + tol):
            raise InvalidInputError(
                f"Growth bound w = {w} fails at s = {s}: ‖e^(sL)‖ = {growth:.6g}."
            )

    perturbed = matrix_exp(t * (l.superoperator + perturbation))
    lhs = operator_norm(perturbed - evolve(l, t))
    rhs = float(np.exp(t * w) * np.expm1(t * operator_norm(perturbation)))
    return InequalityReport(lhs, rhs, {"t": t, "w": w, "dim": l.size})
