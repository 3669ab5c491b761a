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
Unit tests for the seeded random matrix generators.

"""
import numpy as np
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.linalg import (
    operator_norm,
    random_contraction,
    random_density_matrix,
    random_hermitian,
    random_isometry,
    random_projector,
    random_pure_state,
    random_unitary,
)


@pytest.mark.parametrize("dim", [1, 2, 5])
def test_random_unitary_is_unitary(dim, rng):
    """Test that random unitaries satisfy UᴴU = 1."""
    unitary = random_unitary(dim, rng)
    np.testing.assert_allclose(unitary.conj().T @ unitary, np.eye(dim), atol=1e-12)


def test_random_isometry_shape_and_columns(rng):
    """Test that isometries have orthonormal columns."""
    isometry = random_isometry(6, 2, rng)
    assert isometry.shape == (6, 2)
    np.testing.assert_allclose(isometry.conj().T @ isometry, np.eye(2), atol=1e-12)


def test_random_isometry_rejects_wide_shape(rng):
    """Test that an isometry with more columns than rows is rejected."""
    with pytest.raises(InvalidInputError, match="rows >= cols"):
        random_isometry(2, 3, rng)


def test_random_hermitian_norm(rng):
    """Test that random Hermitian matrices are Hermitian with the requested norm."""
    hermitian = random_hermitian(4, rng, scale=2.5)
    np.testing.assert_allclose(hermitian, hermitian.conj().T)
    assert operator_norm(hermitian) == pytest.approx(2.5)


@pytest.mark.parametrize("rank", [0, 1, 3])
def test_random_projector(rank, rng):
    """Test that random projectors are Hermitian idempotents of the requested rank."""
    projector = random_projector(3, rank, rng)
    np.testing.assert_allclose(projector @ projector, projector, atol=1e-12)
    assert np.trace(projector).real == pytest.approx(rank)


def test_random_projector_rank_out_of_range(rng):
    """Test that an invalid rank raises an error."""
    with pytest.raises(InvalidInputError, match="rank"):
        random_projector(2, 3, rng)


def test_random_contraction_norm(rng):
    """Test that random contractions have the requested operator norm."""
    assert operator_norm(random_contraction(5, rng, 0.7)) == pytest.approx(0.7)


def test_random_states(rng):
    """Test that random states are normalized and positive."""
    psi = random_pure_state(3, rng)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    rho = random_density_matrix(3, rng, rank=2)
    assert np.trace(rho).real == pytest.approx(1.0)
    assert np.min(np.linalg.eigvalsh(rho)) > -1e-12
    assert np.linalg.matrix_rank(rho, tol=1e-10) == 2


def test_generators_are_reproducible():
    """Test that equal seeds give equal matrices."""
    first = random_unitary(3, np.random.default_rng(7))
    second = random_unitary(3, np.random.default_rng(7))
    np.testing.assert_array_equal(first, second)
