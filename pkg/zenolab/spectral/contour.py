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
Module implementing the holomorphic functional calculus on circular contours.

For a circle Γ with center c and radius r, the trapezoidal rule on N equispaced
nodes zₖ = c + r·e^{2πik/N} turns

.. math::

    \\frac{1}{2\\pi i}\\oint_\\Gamma g(z)\\,dz \\approx \\frac{1}{N}\\sum_k g(z_k)(z_k - c),

which converges geometrically for integrands analytic in an annulus around Γ.

"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from zenolab._typing import ComplexMatrix
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import ResolventSingularError, as_complex_matrix, eigvals, operator_norm
from zenolab.linalg import resolvent as resolvent_at

from .exceptions import ContourThroughSpectrumError, QuadratureFailureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contour:
    """Positively oriented circle used for contour integrals.

    Args:
        center: Center of the circle.
        radius: Radius of the circle.
        nodes: Initial number of quadrature nodes; a power of two, at least 8.

    Raises:
        InvalidInputError: If the radius is not positive or ``nodes`` is not a power of two >= 8.
    """

    center: complex
    radius: float
    nodes: int = 16

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not np.isfinite(self.radius) or self.radius <= 0:
            raise InvalidInputError(f"Contour radius must be positive, got {self.radius}.")
        if self.nodes < 8 or self.nodes & (self.nodes - 1):
            raise InvalidInputError(
                f"Contour node count must be a power of two >= 8, got {self.nodes}."
            )

    @property
    def length(self) -> float:
        """Arc length 2πr."""
        return 2 * np.pi * self.radius

    def points(self, nodes: Optional[int] = None) -> np.ndarray:
        """Equispaced quadrature nodes on the circle."""
        nodes = self.nodes if nodes is None else nodes
        return self.center + self.radius * np.exp(2j * np.pi * np.arange(nodes) / nodes)

    def encloses(self, z: complex) -> bool:
        """Returns True if ``z`` lies strictly inside the circle."""
        return abs(z - self.center) < self.radius

    def with_nodes(self, nodes: int) -> "Contour":
        """Copy of this contour with a different initial node count."""
        return Contour(self.center, self.radius, nodes)


def check_separation(a: np.ndarray, contour: Contour) -> np.ndarray:
    """Verify that no eigenvalue of ``a`` lies on the contour.

    Returns:
        numpy.ndarray: the eigenvalues of ``a``.

    Raises:
        ContourThroughSpectrumError: If an eigenvalue lies within
            ``contour_tol * radius`` of the circle.
    """
    values = eigvals(a)
    gap = np.abs(np.abs(values - contour.center) - contour.radius)
    threshold = get_tolerances().contour_tol * contour.radius
    if values.size and np.min(gap) <= threshold:
        raise ContourThroughSpectrumError(contour, values[int(np.argmin(gap))])
    return values


def integrate_on_contour(
    contour: Contour, integrand: Callable[[complex], np.ndarray]
) -> ComplexMatrix:
    """Adaptive trapezoidal approximation of (1/2πi)∮ integrand(z) dz.

    The node count starts at ``contour.nodes`` and doubles, reusing earlier nodes, until two
    successive results differ by less than the configured quadrature tolerance.

    Raises:
        QuadratureFailureError: If the node cap is reached without convergence.
        InvalidInputError: If the node cap leaves no room to refine the initial nodes.
        ContourThroughSpectrumError: If a resolvent along the contour is singular.
    """
    tol = get_tolerances()
    if 2 * contour.nodes > tol.quadrature_max_nodes:
        raise InvalidInputError(
            f"Contour starts with {contour.nodes} nodes; the node cap of "
            f"{tol.quadrature_max_nodes} leaves no room for refinement."
        )

    def weighted(z: complex) -> np.ndarray:
        try:
            return integrand(z) * (z - contour.center)
        except ResolventSingularError as err:
            raise ContourThroughSpectrumError(contour, err.z) from err

    nodes = contour.nodes
    total = None
    for z in contour.points(nodes):
        value = weighted(z)
        total = value if total is None else total + value
    estimate = total / nodes

    change = np.inf
    while 2 * nodes <= tol.quadrature_max_nodes:
        offsets = np.exp(1j * np.pi * (2 * np.arange(nodes) + 1) / nodes)
        for z in contour.center + contour.radius * offsets:
            total = total + weighted(z)
        nodes *= 2
        refined = total / nodes
        change = operator_norm(refined - estimate)
        estimate = refined
        if change < tol.quadrature_tol * max(1.0, operator_norm(refined)):
            logger.debug("Contour quadrature converged with %d nodes", nodes)
            return estimate

    raise QuadratureFailureError(nodes, change)


def contour_integral(
    a, contour: Contour, weight: Optional[Callable[[complex], complex]] = None
) -> ComplexMatrix:
    """Holomorphic functional calculus f(A) = (1/2πi)∮ f(z)R(z, A) dz.

    Args:
        a: Square matrix.
        contour: Circle separating the part of the spectrum of interest.
        weight: Scalar function f, holomorphic on and inside the contour. Defaults to 1.

    Returns:
        ComplexMatrix: f applied to the spectral part of ``a`` enclosed by the contour.
    """
    arr = as_complex_matrix(a, "a", square=True)
    check_separation(arr, contour)
    if weight is None:
        return integrate_on_contour(contour, lambda z: resolvent_at(arr, z))
    return integrate_on_contour(contour, lambda z: weight(z) * resolvent_at(arr, z))


def _check_projection(arr: np.ndarray, projection: np.ndarray, label: str) -> None:
    scale = max(1.0, operator_norm(projection)) ** 2
    idempotency = operator_norm(projection @ projection - projection)
    commutator = operator_norm(projection @ arr - arr @ projection)
    if max(idempotency, commutator) > 1e-9 * scale * max(1.0, operator_norm(arr)):
        logger.warning(
            "%s: ‖P² - P‖ = %.3e and ‖PA - AP‖ = %.3e exceed tolerance",
            label,
            idempotency,
            commutator,
        )


def spectral_projection(a, contour: Contour) -> ComplexMatrix:
    """Riesz projection P = (1/2πi)∮ R(z, A) dz onto the spectrum enclosed by ``contour``.

    Raises:
        ContourThroughSpectrumError: If an eigenvalue lies on the contour.
        QuadratureFailureError: If quadrature does not converge within the node cap.
    """
    arr = as_complex_matrix(a, "a", square=True)
    projection = contour_integral(arr, contour)
    _check_projection(arr, projection, "spectral_projection")
    return projection


def quasinilpotent(a, lam: complex, contour: Contour) -> ComplexMatrix:
    """Quasinilpotent part N = (1/2πi)∮ (z - λ)R(z, A) dz of the eigenvalue ``lam``.

    N vanishes exactly when ``lam`` is a semisimple eigenvalue, and AP = λP + N.
    """
    return contour_integral(a, contour, lambda z: z - lam)


def projection_derivative(a, b0, contour: Contour) -> ComplexMatrix:
    """First-order coefficient P' = (1/2πi)∮ R(z, A)B(0)R(z, A) dz of P(t) = P + tP' + O(t²)."""
    arr = as_complex_matrix(a, "a", square=True)
    direction = as_complex_matrix(b0, "b0", square=True)
    check_separation(arr, contour)

    def integrand(z: complex) -> np.ndarray:
        res = resolvent_at(arr, z)
        return res @ direction @ res

    return integrate_on_contour(contour, integrand)
