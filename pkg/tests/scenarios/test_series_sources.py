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
Unit tests for error series that do not come from a Zeno instance.

"""
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.scenarios import build_synthetic_series, build_trotter_pair
from zenolab.semigroups import Picture
from zenolab.zeno import rate_fit


def test_synthetic_series_slope():
    """Test that a 1/√n series is fitted with slope -1/2."""
    series = build_synthetic_series(exponent=-0.5)
    assert rate_fit(series).slope == pytest.approx(-0.5, abs=1e-6)
    assert series.instance_label == "synthetic-n^-0.5"
    assert series.n_values == [16, 32, 64, 128, 256, 512, 1024]


def test_synthetic_series_prefactor():
    """Test that the prefactor must be positive."""
    with pytest.raises(InvalidInputError, match="Prefactor must be positive"):
        build_synthetic_series(prefactor=0.0)


@pytest.mark.parametrize("kind", ["pauli", "commuting"])
def test_trotter_pairs(kind):
    """Test that Trotter pairs are qubit generators in the density picture."""
    first, second = build_trotter_pair(kind)
    assert first.picture == second.picture == Picture.DENSITY_MATRIX
    assert first.size == second.size == 4


def test_unknown_trotter_pair():
    """Test that an unknown pair name is rejected."""
    with pytest.raises(InvalidInputError, match="Unknown Trotter pair 'xy'"):
        build_trotter_pair("xy")
