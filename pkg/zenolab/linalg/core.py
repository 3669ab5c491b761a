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
Module containing the dense complex linear algebra primitives consumed by every
other zenolab module: norms, exponentials, resolvents and eigendecompositions.

"""
import logging
from typing import List, Tuple

import numpy as np
import scipy.linalg

from zenolab._typing import ComplexMatrix
from zenolab.config import Tolerances, get_tolerances
from zenolab.exceptions import InvalidInputError, NumericalFailureError

from .exceptions import ResolventSingularError

logger = logging.getLogger(__name__)


def as_complex_matrix(a, name: str = "a", square: bool = False) -> ComplexMatrix:
    """Validate an operator argument and return it as a complex128 array.

    Args:
        a: Array-like operator.
        name: Argument name used in error messages.
        square: If True, additionally require a square matrix.

    Returns:
        ComplexMatrix: a copy of ``a`` with dtype complex128.

    Raises:
        InvalidInputError: If ``a`` is empty, not two-dimensional, not square when required,
            or has non-finite entries.
    """
    arr = np.array(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise InvalidInputError(f"'{name}' must be a two-dimensional matrix, got ndim={arr.ndim}.")
    if arr.size == 0:
        raise InvalidInputError(f"'{name}' is a dimension-zero matrix.")
    if square and arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"'{name}' must be square, got shape {arr.shape}.")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"'{name}' has non-finite entries.")
    return arr


def _power_iteration_norm(arr: np.ndarray, tol: Tolerances) -> float:
    """Largest singular value from power iteration on AᴴA."""
    rng = np.random.default_rng(0)
    vec = rng.standard_normal(arr.shape[1]) + 1j * rng.standard_normal(arr.shape[1])
    vec /= np.linalg.norm(vec)
    estimate = 0.0
    for iteration in range(1, tol.power_iteration_max + 1):
        image = arr.conj().T @ (arr @ vec)
        size = np.linalg.norm(image)
        if size == 0.0:
            return 0.0
        vec = image / size
        if abs(size - estimate) <= tol.power_iteration_tol * size:
            logger.debug("Power iteration converged after %d iterations", iteration)
            return float(np.sqrt(size))
        estimate = size
    raise NumericalFailureError(
        f"Power iteration did not converge within {tol.power_iteration_max} iterations."
    )


def operator_norm(a) -> float:
    """Returns the operator (spectral) norm, i.e. the largest singular value.

    One-dimensional input is treated as a vector and its Euclidean norm is returned.

    Args:
        a: Matrix or vector.

    Returns:
        float: the largest singular value of ``a``.

    Raises:
        InvalidInputError: If ``a`` is empty or has non-finite entries.
        NumericalFailureError: If the singular value computation fails.
    """
    arr = np.asarray(a)
    if arr.size == 0:
        raise InvalidInputError("Operator norm of a dimension-zero matrix is undefined.")
    if arr.ndim == 1:
        return float(np.linalg.norm(arr))
    arr = as_complex_matrix(arr)

    tol = get_tolerances()
    if max(arr.shape) > tol.svd_max_dim:
        return _power_iteration_norm(arr, tol)
    try:
        return float(scipy.linalg.svdvals(arr, check_finite=False)[0])
    except np.linalg.LinAlgError as err:
        raise NumericalFailureError("Singular value decomposition did not converge.") from err


def vector_norm(x) -> float:
    """Returns the Euclidean norm of a vector, or the Hilbert-Schmidt norm of a matrix."""
    return float(np.linalg.norm(np.asarray(x)))


def trace_norm(a) -> float:
    """Returns the trace norm ``tr|a|``, the sum of the singular values.

    Raises:
        InvalidInputError: If ``a`` is not square.
    """
    arr = as_complex_matrix(a, square=True)
    return float(np.sum(scipy.linalg.svdvals(arr, check_finite=False)))


def hermitian_defect(a) -> float:
    """Returns ``||a - aᴴ||``."""
    arr = as_complex_matrix(a, square=True)
    return operator_norm(arr - arr.conj().T)


def matrix_exp(a) -> ComplexMatrix:
    """Matrix exponential by scaling and squaring with an order-13 Padé approximant.

    Raises:
        InvalidInputError: If ``a`` is not square.
    """
    arr = as_complex_matrix(a, square=True)
    return scipy.linalg.expm(arr)


def resolvent(a, z: complex) -> ComplexMatrix:
    """Returns R(z, a) = (z - a)^{-1} via pivoted LU factorization.

    Args:
        a: Square matrix.
        z: Point of the resolvent set.

    Returns:
        ComplexMatrix: the resolvent at ``z``.

    Raises:
        InvalidInputError: If ``a`` is not square.
        ResolventSingularError: If the condition number of ``z - a`` exceeds the configured cap.
    """
    arr = as_complex_matrix(a, square=True)
    dim = arr.shape[0]
    shifted = z * np.eye(dim, dtype=np.complex128) - arr

    singular_values = scipy.linalg.svdvals(shifted, check_finite=False)
    smallest = singular_values[-1]
    condition = singular_values[0] / smallest if smallest > 0 else np.inf
    if not np.isfinite(condition) or condition > get_tolerances().resolvent_cond_cap:
        raise ResolventSingularError(z, condition)

    factors = scipy.linalg.lu_factor(shifted, check_finite=False)
    return scipy.linalg.lu_solve(factors, np.eye(dim, dtype=np.complex128), check_finite=False)


def _check_eig_dimension(arr: np.ndarray) -> None:
    limit = get_tolerances().eig_max_dim
    if arr.shape[0] > limit:
        raise InvalidInputError(
            f"Dense eigendecomposition is limited to dimension {limit}, got {arr.shape[0]}."
        )


def eig(a) -> List[Tuple[complex, np.ndarray]]:
    """Eigenvalues and right eigenvectors of a square matrix.

    Returns:
        list of (eigenvalue, eigenvector) pairs in LAPACK order.

    Raises:
        InvalidInputError: If ``a`` is not square or exceeds the dimension cap.
        NumericalFailureError: If the QR iteration does not converge.
    """
    arr = as_complex_matrix(a, square=True)
    _check_eig_dimension(arr)
    try:
        values, vectors = scipy.linalg.eig(arr, check_finite=False)
    except np.linalg.LinAlgError as err:
        raise NumericalFailureError("Eigenvalue iteration did not converge.") from err
    return [(complex(values[i]), vectors[:, i]) for i in range(len(values))]


def eigvals(a) -> np.ndarray:
    """Eigenvalues of a square matrix (see :func:`eig`)."""
    arr = as_complex_matrix(a, square=True)
    _check_eig_dimension(arr)
    try:
        return scipy.linalg.eigvals(arr, check_finite=False)
    except np.linalg.LinAlgError as err:
        raise NumericalFailureError("Eigenvalue iteration did not converge.") from err
