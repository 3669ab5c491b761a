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
Module building the worked Zeno examples: the instance on which the O(1/n) rate is
attained, the generalized depolarizing channel and its truncated harmonic-oscillator
variant.

"""
import logging
import warnings
from typing import Optional

import numpy as np

from zenolab._warnings import TruncationWarning
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import as_complex_matrix, operator_norm, trace_norm
from zenolab.semigroups import (
    GeneratorSpec,
    Picture,
    apply_superoperator,
    evolve,
    make_explicit_generator,
    make_hamiltonian_generator,
    vec,
)
from zenolab.zeno import NormKind, ZenoInstance, instance_norm, make_zeno_instance

from .exceptions import ScenarioBuildError

logger = logging.getLogger(__name__)

CHECK_POWERS = 8
SELF_CHECK_TOL = 1e-10


def build_optimality_example(delta: float = 0.5, t: float = 1.0) -> ZenoInstance:
    """Instance L = |1⟩⟨2|, M = |1⟩⟨1| + δ|3⟩⟨3| whose Zeno error is exactly max(t/n, δⁿ).

    L generates I + s|1⟩⟨2|, which is not a contraction; the generator is accepted and
    flagged.

    Raises:
        InvalidInputError: If ``delta`` is not in (0, 1).
        ScenarioBuildError: If L² = 0, LP = 0, ML = LM or ‖Mⁿ - P‖ = δⁿ fails.
    """
    if not 0 < delta < 1:
        raise InvalidInputError(f"delta must lie in (0, 1), got {delta}.")
    generator_matrix = np.zeros((3, 3))
    generator_matrix[0, 1] = 1.0
    m = np.diag([1.0, 0.0, delta])
    projection = np.diag([1.0, 0.0, 0.0])

    name = "optimality"
    if np.any(generator_matrix @ generator_matrix) or np.any(generator_matrix @ projection):
        raise ScenarioBuildError(name, "L² = 0 = LP")
    if np.any(m @ generator_matrix - generator_matrix @ m):
        raise ScenarioBuildError(name, "ML = LM")
    for n in range(1, CHECK_POWERS + 1):
        gap = operator_norm(np.linalg.matrix_power(m, n) - projection)
        if abs(gap - delta**n) > 1e-14:
            raise ScenarioBuildError(name, "‖Mⁿ - P‖ = δⁿ", f"n = {n}: {gap!r}")

    generator = make_explicit_generator(generator_matrix, require_contraction=False)
    return make_zeno_instance(
        m, generator, t, label=name, params={"delta": delta, "t": t}
    )


def depolarizing_superoperator(p: float, sigma: np.ndarray) -> np.ndarray:
    """Superoperator of ρ ↦ (1 - p)ρ + p·tr(ρ)σ."""
    dim = sigma.shape[0]
    replace = np.outer(vec(sigma), vec(np.eye(dim)))
    return (1 - p) * np.eye(dim**2) + p * replace


def _check_state(sigma, name: str = "sigma") -> np.ndarray:
    state = as_complex_matrix(sigma, name, square=True)
    if operator_norm(state - state.conj().T) > 1e-12:
        raise InvalidInputError(f"{name} is not Hermitian.")
    if abs(np.trace(state) - 1) > 1e-10:
        raise InvalidInputError(f"{name} does not have unit trace.")
    if np.min(np.linalg.eigvalsh(state)) < -1e-12:
        raise InvalidInputError(f"{name} is not positive semidefinite.")
    return state


def build_depolarizing(
    p: float,
    sigma,
    g: GeneratorSpec,
    t: float = 1.0,
    norm_kind: NormKind = NormKind.HERMITIAN_1TO1_SAMPLED,
    label: str = "depolarizing",
) -> ZenoInstance:
    """Generalized depolarizing channel M(ρ) = (1 - p)ρ + p·tr(ρ)σ with P(ρ) = tr(ρ)σ.

    The build verifies ‖Mⁿ - P‖ ≤ (2(1 - p))ⁿ for n ≤ 8 in the instance norm.

    Args:
        p: Depolarizing strength in (1/2, 1).
        sigma: Fixed point σ of the channel.
        g: Density-matrix generator of the free evolution.
        t: Total evolution time.
        norm_kind: Norm of the instance.
        label: Name used in reports.

    Raises:
        InvalidInputError: If ``p`` or ``sigma`` is invalid or ``g`` has the wrong size.
        ScenarioBuildError: If the power-convergence check fails.
    """
    if not 0.5 < p < 1:
        raise InvalidInputError(f"p must lie in (1/2, 1), got {p}.")
    state = _check_state(sigma)
    if g.picture != Picture.DENSITY_MATRIX or g.dim != state.shape[0]:
        raise InvalidInputError("Generator must act on density matrices of the size of sigma.")

    m = depolarizing_superoperator(p, state)
    inst = make_zeno_instance(
        m, g, t, norm_kind=norm_kind, label=label, params={"p": p, "t": t}
    )
    projection = depolarizing_superoperator(1.0, state)
    power = np.eye(m.shape[0], dtype=np.complex128)
    for n in range(1, CHECK_POWERS + 1):
        power = power @ m
        gap = instance_norm(inst, power - projection)
        if gap > (2 * (1 - p)) ** n + SELF_CHECK_TOL:
            raise ScenarioBuildError(label, "‖Mⁿ - P‖ ≤ (2(1 - p))ⁿ", f"n = {n}: {gap:.6g}")
    return inst


def reference_oscillator_state(truncation: int) -> np.ndarray:
    """σ = (1/3)(|0⟩⟨0| + |1⟩⟨1| + |2⟩⟨2|) + (1/10)(|0⟩⟨1| + |1⟩⟨0|) in ``truncation`` levels."""
    sigma = np.zeros((truncation, truncation), dtype=np.complex128)
    sigma[:3, :3] = np.eye(3) / 3
    sigma[0, 1] = sigma[1, 0] = 0.1
    return sigma


def build_truncated_oscillator(
    truncation: int = 16,
    sigma=None,
    p: float = 0.75,
    t: float = 1.0,
    norm_kind: NormKind = NormKind.HERMITIAN_1TO1_SAMPLED,
) -> ZenoInstance:
    """Depolarizing measurement of a harmonic oscillator truncated to a finite Fock space.

    H = diag(1/2, 3/2, ..., truncation - 1/2), L = -i[H, ·] and M depolarizes toward σ.
    The instance is flagged ``truncated``: constants of the untruncated oscillator are not
    certified, and a TruncationWarning is emitted.

    Raises:
        InvalidInputError: If ``truncation`` < 3 or σ does not fit in the truncated space.
        ScenarioBuildError: If P e^{tL}(1 - P) ≠ 0 or ‖(1 - P)e^{tL}P‖ > t‖L(σ)‖₁.
    """
    if truncation < 3:
        raise InvalidInputError(f"Truncation must be at least 3, got {truncation}.")
    if sigma is None:
        state = reference_oscillator_state(truncation)
    else:
        given = _check_state(sigma)
        if given.shape[0] > truncation:
            raise InvalidInputError(
                f"sigma has {given.shape[0]} levels but the truncation keeps {truncation}."
            )
        state = np.zeros((truncation, truncation), dtype=np.complex128)
        state[: given.shape[0], : given.shape[0]] = given

    warnings.warn(
        f"Oscillator truncated to {truncation} Fock levels; bounds hold for the truncated model.",
        TruncationWarning,
    )
    hamiltonian = np.diag(np.arange(truncation) + 0.5)
    g = make_hamiltonian_generator(hamiltonian, Picture.DENSITY_MATRIX)
    inst = build_depolarizing(p, state, g, t, norm_kind=norm_kind, label="truncated-oscillator")
    inst = make_zeno_instance(
        inst.m,
        g,
        t,
        norm_kind=norm_kind,
        spectrum=inst.spectrum,
        label=inst.label,
        flags=("truncated",),
        params={"truncation": truncation, "p": p, "t": t},
    )

    projection = depolarizing_superoperator(1.0, state)
    complement = np.eye(projection.shape[0]) - projection
    semigroup = evolve(g, t)
    leak_in = instance_norm(inst, projection @ semigroup @ complement)
    if leak_in > SELF_CHECK_TOL:
        raise ScenarioBuildError(inst.label, "P e^{tL}(1 - P) = 0", f"norm {leak_in:.3e}")
    leak_out = instance_norm(inst, complement @ semigroup @ projection)
    limit = t * trace_norm(apply_superoperator(g.superoperator, state))
    if leak_out > limit + SELF_CHECK_TOL:
        raise ScenarioBuildError(
            inst.label, "‖(1 - P)e^{tL}P‖ ≤ t‖L(σ)‖₁", f"{leak_out:.6g} > {limit:.6g}"
        )
    logger.info("Built truncated oscillator with %d levels", truncation)
    return inst
