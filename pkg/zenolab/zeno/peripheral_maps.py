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
Module building the per-eigenvalue objects of Zeno limits with several peripheral
eigenvalues.

For s ≥ 0 let A(s) = P_Σ M e^{sL} P_Σ = P_Σ M + sB(s). The spectral projection Pⱼ(s) of
A(s) on the contour Γⱼ around λⱼ and the map Cⱼ(s) = λ̄ⱼ Pⱼ(s) A(s) Pⱼ(s) reduce the
Zeno product on each peripheral block to a Chernoff product. This is valid while the
perturbation sB(s) keeps the spectrum of A(s) separated, i.e. for s ≤ ε.

"""
import logging
import warnings
from typing import NamedTuple

import numpy as np

from zenolab._typing import ComplexMatrix, MatrixFunction
from zenolab._warnings import EpsilonExceededWarning
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import operator_norm
from zenolab.semigroups import evolve
from zenolab.spectral import (
    Contour,
    semicontinuity_epsilon,
    spectral_projection,
    sup_perturbation_norm,
)

from .instance import ZenoInstance

logger = logging.getLogger(__name__)

GRID_POINTS = 32
GRID_SPAN = 1e-3


class ChernoffMaps(NamedTuple):
    """Inputs of the approximate modified Chernoff lemma for one peripheral block.

    Attributes:
        c_map: u ↦ Cⱼ(tu).
        p_map: u ↦ Pⱼ(tu).
        p: Pⱼ = Pⱼ(0).
        v: Sampled sup of ‖Pⱼ(tu) - Pⱼ‖/u.
        w: Sampled sup of ‖Cⱼ(tu) - Pⱼ(tu)‖/u.
    """

    c_map: MatrixFunction
    p_map: MatrixFunction
    p: ComplexMatrix
    v: float
    w: float


def sample_grid(n: int) -> np.ndarray:
    """Geometric grid of 32 points from 10⁻³/n to 1/n."""
    return np.geomspace(GRID_SPAN / n, 1.0 / n, GRID_POINTS)


def compressed_step(inst: ZenoInstance, s: float) -> ComplexMatrix:
    """A(s) = P_Σ M e^{sL} P_Σ."""
    p_sigma = inst.spectrum.p_sigma
    return p_sigma @ inst.m @ evolve(inst.generator, s) @ p_sigma


def perturbation_direction(inst: ZenoInstance) -> MatrixFunction:
    """Map s ↦ B(s) = (A(s) - P_Σ M)/s, with B(0) = P_Σ M L P_Σ."""
    p_sigma = inst.spectrum.p_sigma
    base = p_sigma @ inst.m
    derivative = base @ inst.generator.superoperator @ p_sigma

    def b_map(s: float) -> ComplexMatrix:
        if s == 0:
            return derivative
        return (compressed_step(inst, s) - base) / s

    return b_map


def zeno_epsilon(inst: ZenoInstance) -> float:
    """Step size ε below which the peripheral contours keep separating the spectrum.

    ε = min(ε₁, ε₂), where ε₁ controls M(1 - P_Σ) on the circle |z| = (1 + δ)/2 with
    b = ‖M(1 - P_Σ)‖‖L‖, and ε₂ is the smallest radius over the peripheral contours of
    P_Σ M perturbed by sB(s).
    """
    spectrum = inst.spectrum
    complement = inst.m @ (np.eye(inst.size) - spectrum.p_sigma)
    norm_l = operator_norm(inst.generator.superoperator)

    inner = Contour(0.0, (1 + spectrum.delta) / 2)
    eps_inner = semicontinuity_epsilon(
        complement, inner, operator_norm(complement) * norm_l
    ).epsilon

    b_sup = sup_perturbation_norm(perturbation_direction(inst), inst.t)
    base = spectrum.p_sigma @ inst.m
    eps_outer = min(
        (semicontinuity_epsilon(base, contour, b_sup).epsilon for contour in spectrum.contours),
        default=np.inf,
    )
    epsilon = float(min(eps_inner, eps_outer))
    logger.debug("zeno_epsilon('%s'): eps1 = %.6g, eps2 = %.6g", inst.label, eps_inner, eps_outer)
    return epsilon


def peripheral_chernoff_maps(inst: ZenoInstance, j: int, n: int) -> ChernoffMaps:
    """Chernoff maps Cⱼ(t·), Pⱼ(t·) of the j-th peripheral block for ``n`` steps.

    Emits an EpsilonExceededWarning when t/n exceeds :func:`zeno_epsilon`; the maps are
    still computed.

    Raises:
        InvalidInputError: If ``j`` is not a peripheral index or ``n`` < 1.
    """
    spectrum = inst.spectrum
    if not 0 <= j < spectrum.num_peripheral:
        raise InvalidInputError(
            f"Peripheral index {j} out of range for {spectrum.num_peripheral} eigenvalue(s)."
        )
    if n < 1:
        raise InvalidInputError(f"Number of steps must be at least 1, got {n}.")

    epsilon = zeno_epsilon(inst)
    if inst.t / n > epsilon:
        warnings.warn(
            f"Step t/n = {inst.t / n:.6g} exceeds the separation radius {epsilon:.6g} "
            f"for '{inst.label}'.",
            EpsilonExceededWarning,
        )

    lam_conj = np.conj(spectrum.eigenvalues[j])
    contour = spectrum.contours[j]
    projection = spectrum.projections[j]

    def p_map(u: float) -> ComplexMatrix:
        if u == 0:
            return projection
        return spectral_projection(compressed_step(inst, inst.t * u), contour)

    def c_map(u: float) -> ComplexMatrix:
        step = compressed_step(inst, inst.t * u)
        p_u = projection if u == 0 else spectral_projection(step, contour)
        return lam_conj * (p_u @ step @ p_u)

    v = w = 0.0
    for u in sample_grid(n):
        p_u = p_map(u)
        v = max(v, operator_norm(p_u - projection) / u)
        w = max(w, operator_norm(c_map(u) - p_u) / u)
    return ChernoffMaps(c_map=c_map, p_map=p_map, p=projection, v=v, w=w)
