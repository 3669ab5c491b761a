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
Unit tests for random channels, relative entropy and the SDPI estimate.

"""
import numpy as np
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.scenarios import (
    EstimationFailureError,
    build_random_cptp,
    build_sdpi_certificate,
    pinching_superoperator,
    random_stinespring_channel,
    relative_entropy,
)
from zenolab.semigroups import is_cptp, random_lindblad_generator
from zenolab.zeno import NormKind


@pytest.mark.parametrize("dim, env_dim", [(2, 1), (2, 3), (3, 2)])
def test_stinespring_channel_is_cptp(rng, dim, env_dim):
    """Test that random Stinespring channels are CPTP."""
    assert is_cptp(random_stinespring_channel(dim, env_dim, rng), dim)


def test_random_cptp_instance(rng):
    """Test that a random channel has the peripheral eigenvalue 1."""
    g = random_lindblad_generator(2, 1, rng, 0.5)
    inst = build_random_cptp(2, 2, seed=3, g=g)
    assert inst.norm_kind == NormKind.HERMITIAN_1TO1_SAMPLED
    assert any(abs(lam - 1) < 1e-8 for lam in inst.spectrum.eigenvalues)
    assert inst.params == {"dim": 2, "env_dim": 2, "seed": 3, "t": 1.0}


def test_random_cptp_validation(rng):
    """Test the size checks of random channel instances."""
    g = random_lindblad_generator(2, 1, rng, 0.5)
    with pytest.raises(InvalidInputError, match="Generator acts on size 4, expected 9"):
        build_random_cptp(3, 2, seed=0, g=g)
    with pytest.raises(InvalidInputError, match="Need dim >= 2"):
        build_random_cptp(1, 2, seed=0, g=g)


def test_pinching_keeps_the_diagonal():
    """Test that pinching removes the off-diagonal entries."""
    rho = np.array([[0.6, 0.2j], [-0.2j, 0.4]])
    image = (pinching_superoperator(2) @ rho.reshape(-1, order="F")).reshape(2, 2, order="F")
    np.testing.assert_allclose(image, np.diag([0.6, 0.4]))


def test_relative_entropy_values():
    """Test D(ρ‖ρ) = 0 and D(pure‖maximally mixed) = log d."""
    rho = np.diag([0.7, 0.3])
    assert relative_entropy(rho, rho) == pytest.approx(0.0, abs=1e-12)
    assert relative_entropy(np.diag([1.0, 0.0, 0.0]), np.eye(3) / 3) == pytest.approx(np.log(3))


def test_relative_entropy_support():
    """Test that a state outside the support of σ has no finite divergence."""
    assert relative_entropy(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])) is None


def test_sdpi_certificate_for_partial_dephasing():
    """Test the SDPI estimate of ρ ↦ (1 - q)ρ + qΔ(ρ)."""
    pinching = pinching_superoperator(2)
    channel = 0.5 * np.eye(4) + 0.5 * pinching
    certificate = build_sdpi_certificate(channel, pinching, states=64, seed=1)
    assert 0 < certificate.delta <= np.sqrt(0.5) + 1e-9
    assert certificate.c_tilde <= np.sqrt(2 * np.log(2)) + 1e-9


def test_sdpi_needs_commuting_maps(rng):
    """Test that M and P must commute."""
    channel = random_stinespring_channel(2, 2, rng)
    with pytest.raises(InvalidInputError, match="must commute"):
        build_sdpi_certificate(channel, pinching_superoperator(2), states=8)


def test_sdpi_fails_without_samples():
    """Test that a trivial conditional expectation discards every sample."""
    with pytest.raises(EstimationFailureError, match="Every sampled state was discarded"):
        build_sdpi_certificate(pinching_superoperator(2), np.eye(4), states=8)
