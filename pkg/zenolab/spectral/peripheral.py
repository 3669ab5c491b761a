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
Module classifying the uniform power convergence of a contraction M:

.. math::

    \\|M^n - \\sum_j \\lambda_j^n P_j\\| \\le \\tilde c\\,\\delta^n

with peripheral eigenvalues λⱼ on the unit circle and Riesz projections Pⱼ.

"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from zenolab._typing import ComplexMatrix
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import as_complex_matrix, eigvals, operator_norm

from .contour import Contour, quasinilpotent, spectral_projection
from .exceptions import NotPowerConvergentError

logger = logging.getLogger(__name__)

DELTA_OFFSET = 1e-12
MIN_GAP = 1e-10


@dataclass(frozen=True, eq=False)
class PeripheralSpectrum:
    """Peripheral spectral data of a uniformly power convergent contraction.

    Args:
        eigenvalues: Peripheral eigenvalues λⱼ (cluster centroids).
        projections: Riesz projections Pⱼ.
        p_sigma: ΣPⱼ.
        delta: Bound on the modulus of the non-peripheral spectrum.
        c_tilde: Smallest c̃ with ‖Mⁿ - Σλⱼⁿ Pⱼ‖ ≤ c̃δⁿ on the sampled powers.
        nilpotent_norms: ‖Nⱼ‖ of the peripheral quasinilpotent parts.
        contours: Circles used to compute each Pⱼ.
    """

    eigenvalues: Tuple[complex, ...]
    projections: Tuple[ComplexMatrix, ...]
    p_sigma: ComplexMatrix
    delta: float
    c_tilde: float
    nilpotent_norms: Tuple[float, ...]
    contours: Tuple[Contour, ...] = ()

    @property
    def num_peripheral(self) -> int:
        """Number J of peripheral eigenvalues."""
        return len(self.eigenvalues)

    def reconstruct(self, n: int) -> ComplexMatrix:
        """Returns Σλⱼⁿ Pⱼ."""
        result = np.zeros_like(self.p_sigma)
        for lam, projection in zip(self.eigenvalues, self.projections):
            result = result + lam**n * projection
        return result


def cluster_eigenvalues(values: Sequence[complex], radius: float) -> List[List[int]]:
    """Group eigenvalues whose chains of pairwise distances stay within ``radius``.

    Returns:
        list of index lists, one per cluster, ordered by smallest index.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(len(values)))
    for i, first in enumerate(values):
        for j in range(i + 1, len(values)):
            if abs(first - values[j]) <= radius:
                graph.add_edge(i, j)
    return sorted((sorted(component) for component in nx.connected_components(graph)), key=min)


def _peripheral_contours(eigenvalues: Sequence[complex], delta: float) -> List[Contour]:
    contours = []
    for j, lam in enumerate(eigenvalues):
        radius = (1 - delta) / 2
        others = [abs(lam - other) for i, other in enumerate(eigenvalues) if i != j]
        if others:
            radius = min(radius, min(others) / 3)
        contours.append(Contour(lam, radius))
    return contours


def _fit_c_tilde(arr: np.ndarray, spectrum: PeripheralSpectrum, n_max: int) -> float:
    floor = get_tolerances().error_floor
    power = np.eye(arr.shape[0], dtype=np.complex128)
    c_tilde = 0.0
    for n in range(1, n_max + 1):
        power = power @ arr
        residual = operator_norm(power - spectrum.reconstruct(n))
        if residual <= floor:
            continue
        rate = spectrum.delta**n
        if rate == 0.0:
            raise NotPowerConvergentError(
                f"Residual {residual:.3e} at n = {n} does not decay at rate delta = "
                f"{spectrum.delta:.3e}."
            )
        c_tilde = max(c_tilde, residual / rate)
    return c_tilde


def classify_power_convergence(
    m, peripheral_tol: Optional[float] = None, n_max: int = 64
) -> PeripheralSpectrum:
    """Classify a contraction as uniformly power convergent.

    Eigenvalues with modulus at least ``1 - peripheral_tol`` are peripheral and are grouped
    into clusters of radius ``peripheral_tol``. Each cluster gets a Riesz projection on a
    circle of radius min(min_{i≠j}|λᵢ - λⱼ|/3, (1 - δ)/2).

    Args:
        m: Square matrix with spectral radius at most one.
        peripheral_tol: Unit-circle membership and clustering tolerance.
        n_max: Largest power used to fit c̃.

    Returns:
        PeripheralSpectrum: peripheral eigenvalues, projections, gap and constant.

    Raises:
        InvalidInputError: If the spectral radius of ``m`` exceeds one.
        NotPowerConvergentError: If the spectral gap closes or a peripheral eigenvalue has a
            non-vanishing quasinilpotent part.
    """
    tol = get_tolerances()
    peripheral_tol = tol.peripheral_tol if peripheral_tol is None else peripheral_tol
    arr = as_complex_matrix(m, "m", square=True)
    values = eigvals(arr)

    radius = float(np.max(np.abs(values)))
    if radius > 1 + tol.contraction_tol:
        raise InvalidInputError(f"m has spectral radius {radius:.12g} > 1; not a contraction.")

    moduli = np.abs(values)
    peripheral = values[moduli >= 1 - peripheral_tol]
    remainder = moduli[moduli < 1 - peripheral_tol]
    delta = (float(np.max(remainder)) if remainder.size else 0.0) + DELTA_OFFSET
    if delta >= 1 - MIN_GAP:
        raise NotPowerConvergentError(f"Spectral gap closed: non-peripheral modulus {delta:.12g}.")

    clusters = cluster_eigenvalues(peripheral, peripheral_tol)
    eigenvalues = [complex(np.mean(peripheral[cluster])) for cluster in clusters]
    contours = _peripheral_contours(eigenvalues, delta)

    projections, nilpotent_norms = [], []
    for lam, contour in zip(eigenvalues, contours):
        projections.append(spectral_projection(arr, contour))
        nilpotent_norms.append(operator_norm(quasinilpotent(arr, lam, contour)))
    for lam, size in zip(eigenvalues, nilpotent_norms):
        if size > tol.nilpotent_max:
            raise NotPowerConvergentError(
                f"Peripheral eigenvalue {lam} has quasinilpotent part of norm {size:.3e}."
            )

    p_sigma = sum(projections, np.zeros_like(arr))
    for j, first in enumerate(projections):
        for k, second in enumerate(projections):
            expected = first if j == k else 0.0
            if operator_norm(first @ second - expected) > 1e-8:
                logger.warning("Projections %d and %d are not orthogonal idempotents", j, k)

    spectrum = PeripheralSpectrum(
        eigenvalues=tuple(eigenvalues),
        projections=tuple(projections),
        p_sigma=p_sigma,
        delta=delta,
        c_tilde=0.0,
        nilpotent_norms=tuple(nilpotent_norms),
        contours=tuple(contours),
    )
    c_tilde = _fit_c_tilde(arr, spectrum, n_max)
    logger.info(
        "Classified %d peripheral eigenvalue(s), delta = %.6g, c_tilde = %.6g",
        len(eigenvalues),
        delta,
        c_tilde,
    )
    return PeripheralSpectrum(
        eigenvalues=spectrum.eigenvalues,
        projections=spectrum.projections,
        p_sigma=p_sigma,
        delta=delta,
        c_tilde=c_tilde,
        nilpotent_norms=spectrum.nilpotent_norms,
        contours=spectrum.contours,
    )
