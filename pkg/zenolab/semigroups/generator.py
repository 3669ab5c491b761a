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
Module defining GeneratorSpec, the generator of a contraction semigroup, and its
constructors for closed systems, GKLS (Lindblad) dynamics and explicit matrices.

"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from zenolab._typing import ComplexMatrix
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError, NumericalFailureError
from zenolab.linalg import (
    as_complex_matrix,
    hermitian_defect,
    matrix_exp,
    operator_norm,
    random_contraction,
    random_hermitian,
)

from .superoperators import (
    commutator_superoperator,
    hilbert_dimension,
    is_cptp,
    superoperator_from_sandwich,
)

logger = logging.getLogger(__name__)

CERTIFICATE_TIMES: Tuple[float, ...] = (1e-3, 1e-2, 1e-1, 1.0, 10.0)


class GeneratorKind(str, Enum):
    """Origin of a semigroup generator."""

    HAMILTONIAN = "hamiltonian"
    LINDBLAD = "lindblad"
    EXPLICIT = "explicit"


class Picture(str, Enum):
    """Space a generator acts on.

    Attributes:
        STATE_VECTOR: L acts on vectors of C^d.
        DENSITY_MATRIX: L acts on column-stacked d x d operators.
    """

    STATE_VECTOR = "state-vector"
    DENSITY_MATRIX = "density-matrix"


@dataclass(frozen=True, eq=False)
class GeneratorSpec:
    """Generator L of a semigroup (e^{tL})_{t≥0} together with its contractivity certificate.

    Args:
        kind: How the generator was built.
        dim: Hilbert space dimension d.
        superoperator: Matrix of L; d x d in the state-vector picture, d² x d² otherwise.
        picture: Space the generator acts on.
        hamiltonian: Hamiltonian H, when known.
        jump_operators: GKLS jump operators.
        explicit_matrix: The user-supplied matrix of an explicit generator.
        contractive: Whether ``‖e^{sL}‖ ≤ 1`` was certified on :data:`CERTIFICATE_TIMES`.
    """

    kind: GeneratorKind
    dim: int
    superoperator: ComplexMatrix
    picture: Picture = Picture.STATE_VECTOR
    hamiltonian: Optional[ComplexMatrix] = None
    jump_operators: Tuple[ComplexMatrix, ...] = ()
    explicit_matrix: Optional[ComplexMatrix] = None
    contractive: bool = True

    def __post_init__(self):
        for array in (self.superoperator, self.hamiltonian, self.explicit_matrix):
            if array is not None:
                array.setflags(write=False)
        for array in self.jump_operators:
            array.setflags(write=False)

    @property
    def size(self) -> int:
        """Dimension of the space the superoperator acts on."""
        return self.superoperator.shape[0]

    def norm(self) -> float:
        """Operator norm of the superoperator matrix."""
        return operator_norm(self.superoperator)


def _spectral_certificate(superop: np.ndarray) -> float:
    """Largest ‖e^{sL}‖ over the certificate grid."""
    return max(operator_norm(matrix_exp(s * superop)) for s in CERTIFICATE_TIMES)


def _check_hermitian(h: np.ndarray, name: str) -> None:
    defect = hermitian_defect(h)
    if defect > get_tolerances().hermitian_tol * max(1.0, operator_norm(h)):
        raise InvalidInputError(f"'{name}' is not Hermitian: ‖H - Hᴴ‖ = {defect:.3e}.")


def make_hamiltonian_generator(h, picture: Picture = Picture.STATE_VECTOR) -> GeneratorSpec:
    """Generator of the unitary group generated by a Hamiltonian.

    Args:
        h: Hermitian matrix H.
        picture: ``state-vector`` gives L = -iH; ``density-matrix`` gives ρ ↦ -i[H, ρ].

    Returns:
        GeneratorSpec: a certified contraction generator.

    Raises:
        InvalidInputError: If ``h`` is not Hermitian within the configured tolerance.
    """
    picture = Picture(picture)
    hamiltonian = as_complex_matrix(h, "h", square=True)
    _check_hermitian(hamiltonian, "h")

    if picture == Picture.STATE_VECTOR:
        superop = -1j * hamiltonian
    else:
        superop = commutator_superoperator(hamiltonian)

    excess = _spectral_certificate(superop) - 1.0
    if excess > get_tolerances().contraction_tol:
        raise NumericalFailureError(
            f"Unitary evolution failed its contractivity certificate (excess {excess:.3e})."
        )
    return GeneratorSpec(
        kind=GeneratorKind.HAMILTONIAN,
        dim=hamiltonian.shape[0],
        superoperator=superop,
        picture=picture,
        hamiltonian=hamiltonian,
    )


def lindblad_superoperator(h: np.ndarray, jumps: Sequence[np.ndarray]) -> ComplexMatrix:
    """GKLS superoperator ρ ↦ -i[H,ρ] + Σₖ (VₖρVₖᴴ - ½{VₖᴴVₖ, ρ})."""
    dim = h.shape[0]
    identity = np.eye(dim)
    superop = commutator_superoperator(h)
    for jump in jumps:
        damping = jump.conj().T @ jump
        superop = superop + superoperator_from_sandwich(jump, jump.conj().T)
        superop = superop - 0.5 * superoperator_from_sandwich(damping, identity)
        superop = superop - 0.5 * superoperator_from_sandwich(identity, damping)
    return superop


def make_lindblad_generator(h, jumps: Sequence) -> GeneratorSpec:
    """Generator of a quantum dynamical semigroup in GKLS form.

    The resulting semigroup is certified to consist of CPTP maps on the sampling grid,
    which makes it a contraction semigroup in the trace norm.

    Args:
        h: Hermitian Hamiltonian.
        jumps: Jump operators Vₖ of the same dimension as ``h``.

    Returns:
        GeneratorSpec: density-matrix picture generator.

    Raises:
        InvalidInputError: On a non-Hermitian ``h`` or mismatched jump dimensions.
        NumericalFailureError: If a sampled e^{sL} is not CPTP within tolerance.
    """
    hamiltonian = as_complex_matrix(h, "h", square=True)
    _check_hermitian(hamiltonian, "h")
    dim = hamiltonian.shape[0]

    jump_operators = []
    for index, jump in enumerate(jumps):
        operator = as_complex_matrix(jump, f"jumps[{index}]", square=True)
        if operator.shape[0] != dim:
            raise InvalidInputError(
                f"Jump operator {index} has dimension {operator.shape[0]}, expected {dim}."
            )
        jump_operators.append(operator)

    superop = lindblad_superoperator(hamiltonian, jump_operators)
    for s in CERTIFICATE_TIMES:
        if not is_cptp(matrix_exp(s * superop), dim):
            raise NumericalFailureError(f"e^(sL) is not CPTP within tolerance at s = {s}.")
    logger.debug("Lindblad generator with %d jump(s) certified CPTP", len(jump_operators))

    return GeneratorSpec(
        kind=GeneratorKind.LINDBLAD,
        dim=dim,
        superoperator=superop,
        picture=Picture.DENSITY_MATRIX,
        hamiltonian=hamiltonian,
        jump_operators=tuple(jump_operators),
    )


def make_explicit_generator(
    matrix, picture: Picture = Picture.STATE_VECTOR, require_contraction: bool = True
) -> GeneratorSpec:
    """Wrap an explicit matrix as a semigroup generator.

    Args:
        matrix: Square matrix of L.
        picture: Interpretation of the matrix. In the density-matrix picture its size
            must be a perfect square.
        require_contraction: If False, a generator whose semigroup fails the contractivity
            certificate is accepted and marked ``contractive=False``.

    Raises:
        InvalidInputError: If the certificate fails and ``require_contraction`` is True.
    """
    picture = Picture(picture)
    superop = as_complex_matrix(matrix, "matrix", square=True)
    if picture == Picture.DENSITY_MATRIX:
        dim = hilbert_dimension(superop)
    else:
        dim = superop.shape[0]

    excess = _spectral_certificate(superop) - 1.0
    contractive = excess <= get_tolerances().contraction_tol
    if not contractive:
        if require_contraction:
            raise InvalidInputError(
                f"Explicit generator does not generate a contraction semigroup: "
                f"max ‖e^(sL)‖ exceeds 1 by {excess:.3e}."
            )
        logger.info("Accepted non-contractive explicit generator (excess %.3e)", excess)

    return GeneratorSpec(
        kind=GeneratorKind.EXPLICIT,
        dim=dim,
        superoperator=superop,
        picture=picture,
        explicit_matrix=superop.copy(),
        contractive=contractive,
    )


def random_hamiltonian_generator(
    dim: int,
    rng: np.random.Generator,
    scale: float = 1.0,
    picture: Picture = Picture.STATE_VECTOR,
) -> GeneratorSpec:
    """Closed-system generator of a GUE Hamiltonian with ‖H‖ = ``scale``."""
    return make_hamiltonian_generator(random_hermitian(dim, rng, scale), picture)


def random_lindblad_generator(
    dim: int, num_jumps: int, rng: np.random.Generator, scale: float = 1.0
) -> GeneratorSpec:
    """GKLS generator with a GUE Hamiltonian and random jump operators.

    Args:
        dim: Hilbert space dimension.
        num_jumps: Number of jump operators.
        rng: numpy random generator.
        scale: Norm of the Hamiltonian; each jump operator has norm ``sqrt(scale)``.
    """
    hamiltonian = random_hermitian(dim, rng, scale)
    jumps = [random_contraction(dim, rng, np.sqrt(scale)) for _ in range(num_jumps)]
    return make_lindblad_generator(hamiltonian, jumps)
