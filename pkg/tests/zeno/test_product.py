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
Unit tests for Zeno products and their limits.

"""
import numpy as np
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.scenarios import build_optimality_example
from zenolab.semigroups import make_hamiltonian_generator
from zenolab.zeno import (
    make_zeno_instance,
    naive_zeno_product,
    zeno_error,
    zeno_limit,
    zeno_product,
    zeno_step,
)


@pytest.mark.parametrize("n", [1, 7, 64])
def test_product_matches_sequential_multiplication(thm1_instance, n):
    """Test repeated squaring against n sequential multiplications."""
    np.testing.assert_allclose(
        zeno_product(thm1_instance, n), naive_zeno_product(thm1_instance, n), atol=1e-12
    )


@pytest.mark.parametrize("n", [0, -3, 2.5, True])
def test_invalid_step_count(thm1_instance, n):
    """Test that step counts must be positive integers."""
    with pytest.raises(InvalidInputError, match="positive integer"):
        zeno_step(thm1_instance, n)


@pytest.mark.parametrize("delta", [0.3, 0.5, 0.9])
@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("n", [1, 2, 5, 16, 64])
def test_optimality_error_is_exact(delta, t, n):
    """Test that the optimality example has Zeno error max(t/n, δⁿ)."""
    inst = build_optimality_example(delta=delta, t=t)
    assert zeno_error(inst, n) == pytest.approx(max(t / n, delta**n), abs=1e-12)


def test_optimality_limit_is_the_projection(optimality_instance):
    """Test that PLP = 0 makes the Zeno limit equal to P."""
    np.testing.assert_allclose(zeno_limit(optimality_instance, 10), np.diag([1.0, 0.0, 0.0]))


def test_closed_system_limit_is_unitary_on_range(closed_instance):
    """Test that e^{tPLP}P is a partial isometry for a closed system."""
    limit = zeno_limit(closed_instance, 1)
    p = closed_instance.spectrum.p_sigma
    np.testing.assert_allclose(limit.conj().T @ limit, p, atol=1e-9)


def test_two_peripheral_limit_alternates(two_peripheral_instance):
    """Test that the limit carries the phase (-1)ⁿ on the second block."""
    even = zeno_limit(two_peripheral_instance, 2)
    odd = zeno_limit(two_peripheral_instance, 3)
    spectrum = two_peripheral_instance.spectrum
    index = int(np.argmin([lam.real for lam in spectrum.eigenvalues]))
    block = spectrum.projections[index]
    np.testing.assert_allclose(odd @ block, -(even @ block), atol=1e-9)


def test_limit_needs_peripheral_spectrum():
    """Test that a strictly contracting M has no Zeno limit."""
    inst = make_zeno_instance(0.5 * np.eye(2), make_hamiltonian_generator(np.eye(2)), 1.0)
    with pytest.raises(InvalidInputError, match="empty peripheral spectrum"):
        zeno_limit(inst, 1)
