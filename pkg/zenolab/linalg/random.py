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
Module for generating seeded random matrices, states and projectors used by
scenarios and tests.

"""
from typing import Optional

import numpy as np

from zenolab.exceptions import InvalidInputError


def _complex_gaussian(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Create a Haar-random unitary matrix of order ``dim``.

    Args:
        dim: integer square matrix dimension
        rng: numpy random generator

    Returns:
        random unitary matrix of shape dim x dim
    """
    # QR of a complex Gaussian matrix; fixing the phases of R's diagonal makes Q Haar distributed
    unitary, upper = np.linalg.qr(_complex_gaussian(rng, dim, dim))
    phases = np.diag(upper) / np.abs(np.diag(upper))
    return unitary * phases


def random_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Random isometry V (VᴴV = I) of shape ``rows x cols``, with rows >= cols."""
    if rows < cols:
        raise InvalidInputError(f"An isometry needs rows >= cols, got {rows} x {cols}.")
    isometry, upper = np.linalg.qr(_complex_gaussian(rng, rows, cols))
    phases = np.diag(upper) / np.abs(np.diag(upper))
    return isometry * phases


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Random Hermitian matrix from the Gaussian unitary ensemble, normalized to norm ``scale``."""
    matrix = _complex_gaussian(rng, dim, dim)
    hermitian = (matrix + matrix.conj().T) / 2
    size = np.linalg.norm(hermitian, 2)
    return hermitian if size == 0 else scale * hermitian / size


def random_projector(dim: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    """Hermitian rank-``rank`` projector spanned by the first columns of a Haar frame."""
    if not 0 <= rank <= dim:
        raise InvalidInputError(f"Projector rank must lie in [0, {dim}], got {rank}.")
    frame = random_unitary(dim, rng)[:, :rank]
    return frame @ frame.conj().T


def random_contraction(dim: int, rng: np.random.Generator, norm: float = 1.0) -> np.ndarray:
    """Random complex matrix rescaled to operator norm ``norm``."""
    matrix = _complex_gaussian(rng, dim, dim)
    return norm * matrix / np.linalg.norm(matrix, 2)


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unit vector in C^dim."""
    psi = _complex_gaussian(rng, dim, 1)[:, 0]
    return psi / np.linalg.norm(psi)


def random_density_matrix(
    dim: int, rng: np.random.Generator, rank: Optional[int] = None
) -> np.ndarray:
    """Random density matrix W Wᴴ / tr(W Wᴴ) from a ``dim x rank`` Ginibre matrix.

    Args:
        dim: Hilbert space dimension.
        rng: numpy random generator.
        rank: Rank of the state. Defaults to full rank.
    """
    rank = dim if rank is None else rank
    ginibre = _complex_gaussian(rng, dim, rank)
    rho = ginibre @ ginibre.conj().T
    return rho / np.trace(rho).real
