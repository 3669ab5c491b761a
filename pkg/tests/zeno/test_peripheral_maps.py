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
Unit tests for the per-eigenvalue Chernoff maps of several peripheral eigenvalues.

"""
import numpy as np
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.zeno import peripheral_chernoff_maps, zeno_epsilon


def test_separation_radius_is_positive(two_peripheral_instance):
    """Test that the separation radius is positive and finite."""
    epsilon = zeno_epsilon(two_peripheral_instance)
    assert 0 < epsilon < np.inf


@pytest.mark.parametrize("j", [0, 1])
def test_maps_start_at_the_projection(two_peripheral_instance, j):
    """Test C(0) = P(0) = Pⱼ for each peripheral block."""
    maps = peripheral_chernoff_maps(two_peripheral_instance, j, 256)
    projection = two_peripheral_instance.spectrum.projections[j]
    np.testing.assert_array_equal(maps.p, projection)
    np.testing.assert_array_equal(maps.p_map(0.0), projection)
    np.testing.assert_allclose(maps.c_map(0.0), projection, atol=1e-9)
    assert maps.v >= 0 and maps.w >= 0


def test_maps_are_idempotent_along_the_grid(two_peripheral_instance):
    """Test that P(u) stays a projection commuting with C(u)."""
    maps = peripheral_chernoff_maps(two_peripheral_instance, 0, 64)
    u = 1.0 / 64
    p_u, c_u = maps.p_map(u), maps.c_map(u)
    np.testing.assert_allclose(p_u @ p_u, p_u, atol=1e-8)
    np.testing.assert_allclose(p_u @ c_u, c_u, atol=1e-8)
    np.testing.assert_allclose(c_u @ p_u, c_u, atol=1e-8)


def test_peripheral_index_range(two_peripheral_instance):
    """Test that the block index must name a peripheral eigenvalue."""
    with pytest.raises(InvalidInputError, match="Peripheral index 2 out of range"):
        peripheral_chernoff_maps(two_peripheral_instance, 2, 16)


def test_steps_must_be_positive(two_peripheral_instance):
    """Test that at least one step is required."""
    with pytest.raises(InvalidInputError, match="at least 1"):
        peripheral_chernoff_maps(two_peripheral_instance, 0, 0)
