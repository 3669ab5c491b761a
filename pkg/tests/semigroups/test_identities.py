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
Unit tests for the semigroup identities.

"""
import numpy as np
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.linalg import random_hermitian
from zenolab.semigroups import (
    check_integral_equation,
    check_perturbation_bound,
    evolve,
    identities,
    make_explicit_generator,
    random_hamiltonian_generator,
)


def test_evolve_at_time_zero(rng):
    """Test that the semigroup starts at the identity."""
    spec = random_hamiltonian_generator(3, rng)
    np.testing.assert_array_equal(evolve(spec, 0.0), np.eye(3))


def test_evolve_rejects_negative_time(rng):
    """Test that negative times raise an error."""
    with pytest.raises(InvalidInputError, match="nonnegative"):
        evolve(random_hamiltonian_generator(2, rng), -1.0)


def test_evolve_is_a_semigroup(rng):
    """Test e^{(s+t)L} = e^{sL}e^{tL}."""
    spec = random_hamiltonian_generator(3, rng)
    np.testing.assert_allclose(
        evolve(spec, 0.7), evolve(spec, 0.3) @ evolve(spec, 0.4), atol=1e-12
    )


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_integral_equation(t, rng):
    """Test the Duhamel identity between two generators."""
    first = random_hamiltonian_generator(3, rng)
    second = random_hamiltonian_generator(3, rng)
    assert check_integral_equation(first, second, t) < 1e-10


@pytest.mark.parametrize("quad_points", [1, 7, 20, 33])
def test_integral_equation_uses_every_node(quad_points, rng, monkeypatch):
    """Test that the quadrature evaluates exactly quad_points nodes."""
    times = []

    def counting_evolve(spec, s):
        times.append(s)
        return evolve(spec, s)

    monkeypatch.setattr(identities, "evolve", counting_evolve)
    first = random_hamiltonian_generator(3, rng)
    second = random_hamiltonian_generator(3, rng)
    check_integral_equation(first, second, 1.0, quad_points=quad_points)
    assert len(times) == 2 * quad_points + 2


def test_integral_equation_uneven_panels(rng):
    """Test accuracy when the node count is not a multiple of the panel size."""
    first = random_hamiltonian_generator(3, rng)
    second = random_hamiltonian_generator(3, rng)
    assert check_integral_equation(first, second, 1.0, quad_points=20) < 1e-10


def test_integral_equation_size_mismatch(rng):
    """Test that generators of different sizes are rejected."""
    with pytest.raises(InvalidInputError, match="different dimension"):
        check_integral_equation(
            random_hamiltonian_generator(2, rng), random_hamiltonian_generator(3, rng), 1.0
        )


def test_perturbation_bound_holds(rng):
    """Test ‖e^{t(L+A)} - e^{tL}‖ ≤ e^{t‖A‖} - 1 for a unitary group."""
    spec = random_hamiltonian_generator(3, rng)
    perturbation = -1j * random_hermitian(3, rng, 0.3)
    report = check_perturbation_bound(spec, perturbation, 0.0, 1.5)
    assert report.holds()
    assert report.lhs > 0


def test_perturbation_bound_growth_violation():
    """Test that a wrong growth bound raises an error."""
    spec = make_explicit_generator(np.diag([0.5, 0.0]), require_contraction=False)
    with pytest.raises(InvalidInputError, match="Growth bound"):
        check_perturbation_bound(spec, np.zeros((2, 2)), 0.0, 1.0)
