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
Module containing vectorization helpers for superoperators.

Operators are vectorized by stacking columns, so the map ρ ↦ AρB has the
matrix Bᵀ ⊗ A and ``vec(ρ)[i + j*d] = ρ[i, j]``.

"""
from typing import Optional, Sequence

import numpy as np

from zenolab._typing import ComplexMatrix
from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization of a square matrix."""
    return np.asarray(rho).reshape(-1, order="F")


def unvec(vector: np.ndarray, dim: int) -> np.ndarray:
    """Inverse of :func:`vec` for a ``dim x dim`` matrix."""
    return np.asarray(vector).reshape((dim, dim), order="F")


def superoperator_from_sandwich(left: np.ndarray, right: np.ndarray) -> ComplexMatrix:
    """Matrix of ρ ↦ left·ρ·right."""
    return np.kron(np.asarray(right).T, np.asarray(left))


def commutator_superoperator(hamiltonian: np.ndarray) -> ComplexMatrix:
    """Matrix of ρ ↦ -i[H, ρ]."""
    identity = np.eye(hamiltonian.shape[0])
    return -1j * (
        superoperator_from_sandwich(hamiltonian, identity)
        - superoperator_from_sandwich(identity, hamiltonian)
    )


def kraus_to_superoperator(kraus: Sequence[np.ndarray]) -> ComplexMatrix:
    """Matrix of the channel ρ ↦ Σ KρKᴴ."""
    if not kraus:
        raise InvalidInputError("At least one Kraus operator is required.")
    return sum(np.kron(np.asarray(op).conj(), np.asarray(op)) for op in kraus)


def apply_superoperator(superop: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Apply a superoperator matrix to a ``d x d`` operator."""
    dim = np.asarray(rho).shape[0]
    return unvec(np.asarray(superop) @ vec(rho), dim)


def hilbert_dimension(superop: np.ndarray) -> int:
    """Returns d for a d² x d² superoperator matrix.

    Raises:
        InvalidInputError: If the matrix size is not a perfect square.
    """
    size = np.asarray(superop).shape[0]
    dim = int(round(np.sqrt(size)))
    if dim * dim != size:
        raise InvalidInputError(f"Superoperator size {size} is not a perfect square.")
    return dim


def choi_matrix(superop: np.ndarray, dim: int) -> ComplexMatrix:
    """Choi matrix Σᵢⱼ |i⟩⟨j| ⊗ Φ(|i⟩⟨j|) of a superoperator acting on ``dim x dim`` matrices."""
    tensor = np.asarray(superop).reshape(dim, dim, dim, dim)
    # tensor[b, a, j, i] = Φ(|i⟩⟨j|)[a, b]
    return tensor.transpose(3, 1, 2, 0).reshape(dim * dim, dim * dim)


def is_cptp(superop: np.ndarray, dim: int, atol: Optional[float] = None) -> bool:
    """Check trace preservation and complete positivity of a superoperator.

    Args:
        superop: d² x d² superoperator matrix.
        dim: Hilbert space dimension d.
        atol: Absolute tolerance on the trace defect and on negative Choi eigenvalues.

    Returns:
        bool: True if ``superop`` is CPTP within ``atol``.
    """
    atol = get_tolerances().cptp_tol if atol is None else atol
    superop = np.asarray(superop)
    trace_row = vec(np.eye(dim))
    if np.max(np.abs(trace_row @ superop - trace_row)) > atol:
        return False
    choi = choi_matrix(superop, dim)
    if np.max(np.abs(choi - choi.conj().T)) > atol * max(1.0, dim):
        return False
    return bool(np.min(np.linalg.eigvalsh((choi + choi.conj().T) / 2)) >= -atol)
