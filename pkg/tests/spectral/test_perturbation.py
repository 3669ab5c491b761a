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
Unit tests for perturbations of Riesz projections.

"""
import numpy as np
import pytest

from zenolab._warnings import EpsilonExceededWarning
from zenolab.exceptions import InvalidInputError
from zenolab.spectral import (
    Contour,
    check_perturbed_projection_bounds,
    perturbed_projection,
    semicontinuity_epsilon,
    spectral_projection,
    sup_perturbation_norm,
)

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.diag([1.0, -1.0])
UNPERTURBED = np.diag([0.0, 2.0])


def test_negative_perturbation_constant():
    """Test that a negative b is rejected."""
    with pytest.raises(InvalidInputError, match="must be nonnegative"):
        semicontinuity_epsilon(UNPERTURBED, Contour(0, 1), -1.0)


def test_unperturbed_radius_is_infinite():
    """Test that b = 0 gives an infinite semicontinuity radius."""
    assert semicontinuity_epsilon(UNPERTURBED, Contour(0, 1), 0.0).epsilon == np.inf


def test_semicontinuity_constants():
    """Test R, d, |Γ| and ε for diag(0, 2) on the unit circle."""
    data = semicontinuity_epsilon(UNPERTURBED, Contour(0, 1), 1.0)
    assert data.resolvent_sup == pytest.approx(1.0)
    assert data.d == pytest.approx(4 / 3)
    assert data.curve_length == pytest.approx(2 * np.pi)
    assert data.epsilon == pytest.approx(0.5 / (2 * np.sqrt(2)))


def test_perturbed_projection_at_zero():
    """Test that P(0) is the unperturbed projection."""
    contour = Contour(0, 1)
    np.testing.assert_allclose(
        perturbed_projection(UNPERTURBED, lambda s: SIGMA_X, 0.0, contour),
        spectral_projection(UNPERTURBED, contour),
    )


def test_sup_perturbation_norm():
    """Test the sampled supremum of ‖B(s)‖."""
    assert sup_perturbation_norm(lambda s: (1 + s) * SIGMA_X, 2.0) == pytest.approx(3.0)


@pytest.mark.parametrize("t", [0.01, 0.05, 0.1])
def test_perturbed_projection_bounds_hold(t):
    """Test the zeroth- and first-order bounds below the semicontinuity radius."""
    zeroth, first = check_perturbed_projection_bounds(
        UNPERTURBED, lambda s: 0.5 * SIGMA_X + s * 0.5 * SIGMA_Z, t, Contour(0, 1)
    )
    assert zeroth.witness["epsilon"] >= t
    assert zeroth.slack >= -1e-8
    assert first.slack >= -1e-8
    assert first.lhs < zeroth.lhs


def test_epsilon_exceeded_warning():
    """Test that t beyond ε emits an EpsilonExceededWarning."""
    with pytest.warns(EpsilonExceededWarning, match="semicontinuity radius"):
        check_perturbed_projection_bounds(
            UNPERTURBED, lambda s: 0.01 * SIGMA_X, 20.0, Contour(0, 1)
        )
