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
Unit tests for Zeno error series and their domination by explicit bounds.

"""
import warnings

import numpy as np
import pytest

from zenolab._warnings import EpsilonExceededWarning
from zenolab.exceptions import InvalidInputError
from zenolab.scenarios import build_closed_system, build_thm1_random, build_uniform_random
from zenolab.zeno import rate_fit, zeno_error_series

GEOMETRIC_GRID = [2**k for k in range(4, 11)]
CLOSED_GRID = sorted({2**k for k in range(2, 11)} | {3 * 2**k for k in range(1, 9)})
SLOPE_RANGE = (-1.15, -0.85)


def test_series_on_optimality_example(optimality_instance):
    """Test the measured errors of the optimality example."""
    series = zeno_error_series(optimality_instance, [1, 2, 4, 8])
    np.testing.assert_allclose(series.errors, [1.0, 0.5, 0.25, 0.125], atol=1e-12)
    assert series.metadata["bound"] == "none"
    assert all("non-contractive-generator" in entry.flags for entry in series.entries)


@pytest.mark.parametrize(
    "grid, message",
    [([], "must not be empty"), ([4, 2], "strictly increasing"), ([0, 1], "strictly increasing")],
)
def test_series_grid_validation(optimality_instance, grid, message):
    """Test that empty or unordered grids are rejected."""
    with pytest.raises(InvalidInputError, match=message):
        zeno_error_series(optimality_instance, grid)


def test_series_unknown_bound(optimality_instance):
    """Test that an unknown bound name is rejected."""
    with pytest.raises(InvalidInputError, match="Unknown bound 'prop'"):
        zeno_error_series(optimality_instance, [1, 2], with_bound="prop")


def test_series_threads_match_serial(thm1_instance):
    """Test that threaded evaluation reproduces the serial series."""
    serial = zeno_error_series(thm1_instance, [1, 2, 4, 8])
    threaded = zeno_error_series(thm1_instance, [1, 2, 4, 8], workers=3)
    np.testing.assert_allclose(threaded.errors, serial.errors)


@pytest.mark.parametrize("t", [0.5, 1.0])
@pytest.mark.parametrize("seed", range(50))
def test_closed_system_rate_and_domination(seed, t):
    """Test the O(1/n) rate and the closed-system bound of projective measurements."""
    dim = 2 + seed % 7
    inst = build_closed_system(dim=dim, rank=1 + seed % (dim - 1), seed=seed, t=t)
    series = zeno_error_series(inst, CLOSED_GRID, with_bound="closed-system")
    assert series.dominated()
    assert SLOPE_RANGE[0] <= rate_fit(series, (16, 1024)).slope <= SLOPE_RANGE[1]


def test_optimality_bound_domination(optimality_instance):
    """Test that the explicit bound dominates the optimality example."""
    series = zeno_error_series(optimality_instance, [1, 2, 4, 8, 16, 32], with_bound="thm1")
    assert series.dominated()
    assert series.metadata["bound_params"]["b"] == pytest.approx(1.0)


@pytest.mark.parametrize("seed", range(50))
def test_thm1_random_domination(seed):
    """Test domination on random instances with ‖Mⁿ - P‖ ≤ δⁿ."""
    dim = 3 + seed % 4
    delta = 0.1 + 0.015 * seed
    inst = build_thm1_random(dim=dim, rank=1 + seed % (dim - 1), seed=seed, delta=delta)
    series = zeno_error_series(inst, [1, 4, 16, 64, 256], with_bound="thm1")
    assert series.dominated()


@pytest.mark.parametrize("seed", range(50))
def test_uniform_random_domination(seed):
    """Test domination on random instances with c̃ > 1."""
    inst = build_uniform_random(dim=3 + seed % 4, rank=1, seed=seed)
    series = zeno_error_series(inst, [1, 4, 16, 64, 256], with_bound="uniform")
    assert series.dominated()
    assert series.metadata["bound_params"]["c_tilde"] >= 1.0


def test_two_peripheral_rate(two_peripheral_instance):
    """Test the O(1/n) rate towards the Zeno limit with eigenvalues ±1."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EpsilonExceededWarning)
        series = zeno_error_series(two_peripheral_instance, GEOMETRIC_GRID)
    assert np.isfinite(series.metadata["epsilon"])
    assert SLOPE_RANGE[0] <= rate_fit(series).slope <= SLOPE_RANGE[1]


def test_epsilon_exceeded_rows_are_flagged(two_peripheral_instance):
    """Test that steps beyond the separation radius are flagged."""
    inst = two_peripheral_instance.with_time(50.0)
    with pytest.warns(EpsilonExceededWarning, match="separation radius"):
        series = zeno_error_series(inst, [1, 2])
    assert all("epsilon-exceeded" in entry.flags for entry in series.entries)
