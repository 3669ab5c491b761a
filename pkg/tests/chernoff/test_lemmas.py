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
Unit tests for the Chernoff estimates and the product-formula bound.

"""
import numpy as np
import pytest

from zenolab.chernoff import (
    chernoff_approx_modified,
    chernoff_modified,
    chernoff_sqrt_n,
    product_formula_bound,
)
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import matrix_exp, random_contraction, random_hermitian, random_pure_state
from zenolab.zeno import HypothesisViolationError, peripheral_chernoff_maps


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("n", [1, 5, 64, 256])
def test_chernoff_estimates_hold(seed, n):
    """Test both Chernoff estimates on random contractions."""
    rng = np.random.default_rng(seed)
    dim = 2 + seed
    c = random_contraction(dim, rng, norm=0.99)
    x = random_pure_state(dim, rng)
    sqrt_report = chernoff_sqrt_n(c, n, x)
    modified_report = chernoff_modified(c, n, x)
    assert sqrt_report.holds()
    assert modified_report.holds()
    assert sqrt_report.lhs == pytest.approx(modified_report.lhs)


def test_chernoff_identity_is_exact():
    """Test that c = 1 gives zero on both sides."""
    report = chernoff_sqrt_n(np.eye(3), 10, np.ones(3))
    assert report.lhs == pytest.approx(0.0, abs=1e-14)
    assert report.rhs == 0.0


def test_chernoff_rejects_non_contraction():
    """Test that the estimates require a contraction."""
    with pytest.raises(InvalidInputError, match="is not a contraction"):
        chernoff_modified(2 * np.eye(2), 4, np.ones(2))


@pytest.mark.parametrize(
    "n, x, message",
    [(0, np.ones(2), "positive integer"), (3, np.ones(3), "Vector must have 2 entries")],
)
def test_chernoff_argument_validation(n, x, message):
    """Test the step count and vector size checks."""
    with pytest.raises(InvalidInputError, match=message):
        chernoff_sqrt_n(0.5 * np.eye(2), n, x)


def _unitary_pair(rng, dim=3):
    a = -1j * random_hermitian(dim, rng)
    b = -1j * random_hermitian(dim, rng)
    return a, b, lambda s: matrix_exp(s * a) @ matrix_exp(s * b)


@pytest.mark.parametrize("n", [1, 8, 128])
def test_product_formula_bound(rng, n):
    """Test the product-formula bound on a Lie-Trotter splitting."""
    a, b, f = _unitary_pair(rng)
    report = product_formula_bound(f, a + b, 1.0, n)
    assert report.holds()
    assert report.witness["n"] == n


def test_product_formula_needs_identity_at_zero(rng):
    """Test that f(0) must be the identity."""
    a, b, f = _unitary_pair(rng)
    with pytest.raises(InvalidInputError, match="f\\(0\\) must be the identity"):
        product_formula_bound(lambda s: 0.5 * f(s), a + b, 1.0, 4)


def test_product_formula_needs_contractions(rng):
    """Test that samples of f must be contractions."""
    a, _, _ = _unitary_pair(rng)
    growing = np.diag([1.0, 0.0, 0.0])
    with pytest.raises(InvalidInputError, match="is not a contraction"):
        product_formula_bound(lambda s: matrix_exp(s * growing), a, 1.0, 4)


@pytest.mark.parametrize("n", [16, 64, 256])
def test_approximate_modified_chernoff(two_peripheral_instance, n):
    """Test the approximate modified Chernoff estimate on a peripheral block."""
    maps = peripheral_chernoff_maps(two_peripheral_instance, 0, n)
    report = chernoff_approx_modified(maps.c_map, maps.p_map, maps.p, maps.v, maps.w, n)
    assert report.holds()
    assert report.witness["tier"] <= report.rhs + 1e-12


def test_approximate_modified_chernoff_constants(two_peripheral_instance):
    """Test that an underestimated v is reported as a hypothesis violation."""
    maps = peripheral_chernoff_maps(two_peripheral_instance, 0, 16)
    with pytest.raises(HypothesisViolationError, match="tv"):
        chernoff_approx_modified(maps.c_map, maps.p_map, maps.p, 0.0, maps.w, 16)
    with pytest.raises(InvalidInputError, match="must be nonnegative"):
        chernoff_approx_modified(maps.c_map, maps.p_map, maps.p, -1.0, maps.w, 16)


def test_approximate_modified_chernoff_needs_unit_projection(two_peripheral_instance):
    """Test that a projection of norm other than one is rejected."""
    maps = peripheral_chernoff_maps(two_peripheral_instance, 0, 16)
    with pytest.raises(HypothesisViolationError, match="‖P‖ = 1"):
        chernoff_approx_modified(maps.c_map, maps.p_map, 2 * maps.p, maps.v, maps.w, 16)
