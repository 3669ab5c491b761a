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
Module defining ZenoInstance, the pair (M, L) with total time t, and the norms
in which Zeno errors are measured.

"""
import logging
import warnings
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Iterable, Optional, Tuple

import numpy as np

from zenolab._typing import ComplexMatrix
from zenolab._warnings import NonContractiveWarning
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import as_complex_matrix, operator_norm, random_pure_state, trace_norm
from zenolab.semigroups import GeneratorSpec, Picture, apply_superoperator, is_cptp
from zenolab.spectral import PeripheralSpectrum, classify_power_convergence

logger = logging.getLogger(__name__)


class NormKind(str, Enum):
    """Norm used to measure operator-level errors.

    Attributes:
        SPECTRAL_SUPEROP: Largest singular value of the (super)operator matrix.
        HERMITIAN_1TO1_SAMPLED: Sampled maximum of ‖Φ(ψψᴴ)‖₁ over pure states ψ.
    """

    SPECTRAL_SUPEROP = "spectral-superop"
    HERMITIAN_1TO1_SAMPLED = "hermitian-1to1-sampled"


@dataclass(frozen=True, eq=False)
class ZenoInstance:
    """A contraction M, a generator L and a total time t.

    Args:
        m: Matrix of the contraction M.
        generator: Generator L of the semigroup.
        spectrum: Peripheral spectrum of ``m``.
        t: Total evolution time.
        norm_kind: Norm used for operator-level errors.
        label: Name used in reports.
        flags: Report flags such as ``truncated``.
        params: Scenario parameters the instance was built from.
    """

    m: ComplexMatrix
    generator: GeneratorSpec
    spectrum: PeripheralSpectrum
    t: float
    norm_kind: NormKind = NormKind.SPECTRAL_SUPEROP
    label: str = "instance"
    flags: Tuple[str, ...] = ()
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        """Dimension of the space M acts on."""
        return self.m.shape[0]

    def with_time(self, t: float) -> "ZenoInstance":
        """Copy of the instance with a different total time."""
        if t < 0 or not np.isfinite(t):
            raise InvalidInputError(f"Total time must be finite and nonnegative, got t = {t}.")
        return replace(self, t=float(t))

    def norm(self, x: np.ndarray) -> float:
        """Norm of an operator in this instance's norm kind."""
        return instance_norm(self, x)


def sampled_one_to_one_norm(
    phi: np.ndarray,
    dim: int,
    samples: int = 256,
    refinements: int = 50,
    keep: int = 8,
    seed: int = 0,
) -> float:
    """Lower estimate of the induced trace norm of a superoperator on Hermitian inputs.

    The maximum of ‖Φ(ψψᴴ)‖₁ is taken over ``samples`` Haar-random pure states. The best
    ``keep`` states are then improved by random local ascent.

    Args:
        phi: d² x d² superoperator matrix.
        dim: Hilbert space dimension d.
        samples: Number of random starting states.
        refinements: Ascent steps per refined state.
        keep: Number of best states refined.
        seed: Seed of the sampling generator.
    """
    rng = np.random.default_rng(seed)

    def objective(psi: np.ndarray) -> float:
        return trace_norm(apply_superoperator(phi, np.outer(psi, psi.conj())))

    states = [random_pure_state(dim, rng) for _ in range(samples)]
    scores = np.array([objective(psi) for psi in states])
    best = float(np.max(scores))

    for index in np.argsort(scores)[::-1][:keep]:
        psi, score, step = states[index], scores[index], 0.5
        for _ in range(refinements):
            candidate = psi + step * (rng.standard_normal(dim) + 1j * rng.standard_normal(dim))
            candidate /= np.linalg.norm(candidate)
            value = objective(candidate)
            if value > score:
                psi, score = candidate, value
            else:
                step *= 0.7
        best = max(best, float(score))
    return best


def instance_norm(inst: ZenoInstance, x: np.ndarray) -> float:
    """Norm of an operator ``x`` acting on the instance's space, in ``inst.norm_kind``."""
    if inst.norm_kind == NormKind.HERMITIAN_1TO1_SAMPLED:
        return sampled_one_to_one_norm(x, inst.generator.dim)
    return operator_norm(x)


def _is_contraction(m: np.ndarray, norm_kind: NormKind, dim: int) -> Tuple[bool, float]:
    tol = get_tolerances().contraction_tol
    if norm_kind == NormKind.HERMITIAN_1TO1_SAMPLED:
        if is_cptp(m, dim):
            return True, 1.0
        size = sampled_one_to_one_norm(m, dim)
    else:
        size = operator_norm(m)
    return size <= 1 + tol, size


def make_zeno_instance(
    m,
    generator: GeneratorSpec,
    t: float,
    norm_kind: NormKind = NormKind.SPECTRAL_SUPEROP,
    spectrum: Optional[PeripheralSpectrum] = None,
    label: str = "instance",
    flags: Iterable[str] = (),
    params: Optional[Dict[str, Any]] = None,
    allow_noncontractive: bool = False,
    n_max: int = 64,
) -> ZenoInstance:
    """Validate (M, L, t) and classify the power convergence of M.

    Args:
        m: Contraction M acting on the same space as ``generator``.
        generator: Semigroup generator L.
        t: Total evolution time.
        norm_kind: Norm in which M must be a contraction and errors are measured.
        spectrum: Precomputed peripheral spectrum; classified from ``m`` when omitted.
        label: Name used in reports.
        flags: Report flags.
        params: Scenario parameters to record.
        allow_noncontractive: Accept an M that is not a contraction in ``norm_kind``; the
            instance is flagged ``non-contractive`` and a NonContractiveWarning is emitted.
        n_max: Largest power used when classifying ``m``.

    Returns:
        ZenoInstance: the validated instance.

    Raises:
        InvalidInputError: On size mismatch, negative time, an unsupported norm kind for the
            generator's picture, or a non-contractive M.
    """
    matrix = as_complex_matrix(m, "m", square=True)
    if matrix.shape[0] != generator.size:
        raise InvalidInputError(
            f"M has dimension {matrix.shape[0]} but the generator acts on dimension "
            f"{generator.size}."
        )
    if t < 0 or not np.isfinite(t):
        raise InvalidInputError(f"Total time must be finite and nonnegative, got t = {t}.")
    try:
        norm_kind = NormKind(norm_kind)
    except ValueError as err:
        raise InvalidInputError(f"Unknown norm kind '{norm_kind}'.") from err
    if norm_kind == NormKind.HERMITIAN_1TO1_SAMPLED and generator.picture != Picture.DENSITY_MATRIX:
        raise InvalidInputError("The sampled 1->1 norm requires a density-matrix generator.")

    flags = list(flags)
    contractive, size = _is_contraction(matrix, norm_kind, generator.dim)
    if not contractive:
        if not allow_noncontractive:
            raise InvalidInputError(
                f"M is not a contraction in the {norm_kind.value} norm (norm {size:.12g})."
            )
        flags.append("non-contractive")
        warnings.warn(
            f"M has {norm_kind.value} norm {size:.6g} > 1; bounds are not certified for '{label}'.",
            NonContractiveWarning,
        )
    if not generator.contractive and "non-contractive-generator" not in flags:
        flags.append("non-contractive-generator")
        logger.info("Instance '%s' uses a generator without contractivity certificate", label)

    if spectrum is None:
        spectrum = classify_power_convergence(matrix, n_max=n_max)
    matrix.setflags(write=False)
    return ZenoInstance(
        m=matrix,
        generator=generator,
        spectrum=spectrum,
        t=float(t),
        norm_kind=norm_kind,
        label=label,
        flags=tuple(dict.fromkeys(flags)),
        params=dict(params or {}),
    )
