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
Unit tests for the classification of uniformly power convergent contractions.

"""
import numpy as np
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.spectral import (
    NotPowerConvergentError,
    classify_power_convergence,
    cluster_eigenvalues,
)


def test_cluster_eigenvalues():
    """Test that nearby eigenvalues are grouped by connected components."""
    values = [0.0, 1e-9, 1.0, 1.0 + 1e-9, 5.0]
    assert cluster_eigenvalues(values, 1e-8) == [[0, 1], [2, 3], [4]]


def test_two_peripheral_eigenvalues():
    """Test the classification of diag(1, -1, 1/2)."""
    spectrum = classify_power_convergence(np.diag([1.0, -1.0, 0.5]))
    assert spectrum.num_peripheral == 2
    assert spectrum.delta == pytest.approx(0.5)
    assert spectrum.c_tilde == pytest.approx(1.0, rel=1e-2)
    order = np.argsort([lam.real for lam in spectrum.eigenvalues])
    np.testing.assert_allclose([spectrum.eigenvalues[i] for i in order], [-1.0, 1.0], atol=1e-12)
    np.testing.assert_allclose(spectrum.projections[order[0]], np.diag([0, 1, 0]), atol=1e-10)
    np.testing.assert_allclose(spectrum.projections[order[1]], np.diag([1, 0, 0]), atol=1e-10)
    np.testing.assert_allclose(spectrum.p_sigma, np.diag([1, 1, 0]), atol=1e-10)
    assert max(spectrum.nilpotent_norms) < 1e-10


def test_rotating_peripheral_eigenvalue():
    """Test that the reconstruction follows λⁿP for a peripheral phase."""
    spectrum = classify_power_convergence(np.diag([1j, 0.3]))
    assert spectrum.num_peripheral == 1
    np.testing.assert_allclose(spectrum.reconstruct(3), np.diag([-1j, 0]), atol=1e-10)
    assert spectrum.c_tilde <= 1.01


def test_spectral_radius_above_one():
    """Test that a matrix with spectral radius above one is rejected."""
    with pytest.raises(InvalidInputError, match="spectral radius"):
        classify_power_convergence(np.diag([1.5, 0.0]))


def test_peripheral_jordan_block():
    """Test that a non-semisimple peripheral eigenvalue is rejected."""
    with pytest.raises(NotPowerConvergentError, match="quasinilpotent part of norm"):
        classify_power_convergence(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_spectral_gap_closed():
    """Test that an eigenvalue just inside the unit circle closes the gap."""
    with pytest.raises(NotPowerConvergentError, match="Spectral gap closed"):
        classify_power_convergence(np.diag([1.0, 1.0 - 1e-11]), peripheral_tol=1e-12)


def test_no_peripheral_spectrum():
    """Test a strictly contracting matrix with no peripheral eigenvalue."""
    spectrum = classify_power_convergence(np.diag([0.5, 0.25]))
    assert spectrum.num_peripheral == 0
    np.testing.assert_array_equal(spectrum.p_sigma, np.zeros((2, 2)))
