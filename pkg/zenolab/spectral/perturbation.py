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
Module containing perturbation theory for Riesz projections: the semicontinuity
radius of a separated spectral part and the zeroth/first-order approximation
bounds for P(t) = (1/2πi)∮ R(z, A + tB(t)) dz.

"""
import logging
import warnings
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from zenolab._inequality import InequalityReport
from zenolab._typing import ComplexMatrix, MatrixFunction
from zenolab._warnings import EpsilonExceededWarning
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import ResolventSingularError, as_complex_matrix, operator_norm, resolvent

from .contour import Contour, check_separation, projection_derivative, spectral_projection
from .exceptions import ContourThroughSpectrumError

logger = logging.getLogger(__name__)

BOUND_NODES = 256


@dataclass(frozen=True)
class PerturbationData:
    """Constants controlling perturbations of a spectral projection.

    Args:
        resolvent_sup: R, the sup of ‖R(z, A)‖ over the contour nodes.
        d: R·inf (2 + 2|z|²)/(1 + 2|z|²), bounding ‖R(z, A + tB)‖ for t ≤ epsilon.
        curve_length: |Γ| = 2π·radius.
        epsilon: Largest admissible t; ``inf`` when b = 0.
        b: Lipschitz constant of the perturbation, ‖A(t) - A‖ ≤ tb.
    """

    resolvent_sup: float
    d: float
    curve_length: float
    epsilon: float
    b: float


def semicontinuity_epsilon(m0, contour: Contour, b: float) -> PerturbationData:
    """Radius ε such that the contour keeps separating the spectrum of m0 + tB for t ≤ ε.

    ε = (1/2b)·inf(1 + |z|²)^{-1}·(1 + sup‖R(z, m0)‖²)^{-1/2}, with suprema and infima
    taken over the contour nodes.

    Args:
        m0: Unperturbed matrix.
        contour: Circle separating the spectrum of ``m0``.
        b: Perturbation size per unit t; ``b = 0`` yields ``epsilon = inf``.

    Raises:
        InvalidInputError: If ``b`` is negative.
        ContourThroughSpectrumError: If the contour meets the spectrum of ``m0``.
    """
    if b < 0:
        raise InvalidInputError(f"Perturbation constant b must be nonnegative, got {b}.")
    arr = as_complex_matrix(m0, "m0", square=True)
    check_separation(arr, contour)

    points = contour.points()
    norms = []
    for z in points:
        try:
            norms.append(operator_norm(resolvent(arr, z)))
        except ResolventSingularError as err:
            raise ContourThroughSpectrumError(contour, err.z) from err
    sup_resolvent = max(norms)
    modulus_sq = np.abs(points) ** 2
    d_value = sup_resolvent * float(np.min((2 + 2 * modulus_sq) / (1 + 2 * modulus_sq)))
    inf_weight = float(np.min(1 / (1 + modulus_sq)))

    if b == 0:
        epsilon = np.inf
    else:
        epsilon = inf_weight / (2 * b * np.sqrt(1 + sup_resolvent**2))

    return PerturbationData(
        resolvent_sup=sup_resolvent,
        d=d_value,
        curve_length=contour.length,
        epsilon=float(epsilon),
        b=float(b),
    )


def perturbed_projection(a, b_map: MatrixFunction, t: float, contour: Contour) -> ComplexMatrix:
    """Riesz projection P(t) of the perturbed matrix A + tB(t).

    Args:
        a: Unperturbed matrix A.
        b_map: Map s ↦ B(s).
        t: Perturbation parameter.
        contour: Circle separating the spectrum of A.

    Raises:
        ContourThroughSpectrumError: If the perturbation moved an eigenvalue onto the contour.
    """
    arr = as_complex_matrix(a, "a", square=True)
    if t == 0:
        return spectral_projection(arr, contour)
    direction = as_complex_matrix(b_map(t), "b_map(t)", square=True)
    return spectral_projection(arr + t * direction, contour)


def sup_perturbation_norm(b_map: MatrixFunction, t: float, samples: int = 16) -> float:
    """Sampled sup of ‖B(s)‖ over s ∈ [0, t]."""
    return max(operator_norm(b_map(s)) for s in np.linspace(0.0, t, samples))


def check_perturbed_projection_bounds(
    a, b_map: MatrixFunction, t: float, contour: Contour
) -> Tuple[InequalityReport, InequalityReport]:
    """Zeroth- and first-order approximation bounds for P(t).

    With R, d, |Γ| from :func:`semicontinuity_epsilon` and b the sampled sup of ‖B(s)‖:

    * ‖P(t) - P‖ ≤ t·R·b·d·|Γ|/2π
    * ‖P(t) - P - tP'‖ ≤ (t·R²·|Γ|/2π)(t·b²·d + ‖B(t) - B(0)‖)

    Returns:
        tuple of the zeroth-order and first-order InequalityReport.
    """
    arr = as_complex_matrix(a, "a", square=True)
    b_sup = sup_perturbation_norm(b_map, t)
    dense = contour.with_nodes(max(contour.nodes, BOUND_NODES))
    data = semicontinuity_epsilon(arr, dense, b_sup)
    if t > data.epsilon:
        warnings.warn(
            f"t = {t} exceeds the semicontinuity radius {data.epsilon:.3e}; "
            "the approximation bounds are not guaranteed.",
            EpsilonExceededWarning,
        )

    base = spectral_projection(arr, contour)
    perturbed = perturbed_projection(arr, b_map, t, contour)
    b_zero = as_complex_matrix(b_map(0.0), "b_map(0)", square=True)
    derivative = projection_derivative(arr, b_zero, contour)
    scale = data.curve_length / (2 * np.pi)

    witness = {"t": t, "epsilon": data.epsilon, "b": b_sup, "R": data.resolvent_sup, "d": data.d}
    zeroth = InequalityReport(
        lhs=operator_norm(perturbed - base),
        rhs=t * data.resolvent_sup * b_sup * data.d * scale,
        witness={**witness, "order": 0},
    )
    drift = operator_norm(as_complex_matrix(b_map(t), "b_map(t)", square=True) - b_zero)
    first = InequalityReport(
        lhs=operator_norm(perturbed - base - t * derivative),
        rhs=t * data.resolvent_sup**2 * scale * (t * b_sup**2 * data.d + drift),
        witness={**witness, "order": 1},
    )
    return zeroth, first
