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
Fixtures defined in this file can be used by any test in this directory
without needing to import them (pytest will automatically discover them).

"""
import numpy as np
import pytest

from zenolab.config import get_tolerances
from zenolab.scenarios import (
    build_closed_system,
    build_optimality_example,
    build_thm1_random,
    build_two_peripheral,
)


@pytest.fixture(autouse=True)
def default_tolerances(monkeypatch, tmp_path):
    """Run every test with the built-in tolerances."""
    monkeypatch.setenv("ZENOLAB_CONFIG", str(tmp_path / "missing-zenolabrc"))
    get_tolerances.cache_clear()
    yield
    get_tolerances.cache_clear()


@pytest.fixture
def rng():
    """Seeded numpy random generator."""
    return np.random.default_rng(1234)


@pytest.fixture
def optimality_instance():
    """Three-level instance whose Zeno error is max(t/n, δⁿ)."""
    return build_optimality_example(delta=0.5, t=1.0)


@pytest.fixture
def thm1_instance():
    """Random instance with ‖Mⁿ - P‖ ≤ δⁿ and a dissipative generator."""
    return build_thm1_random(dim=4, rank=2, seed=3, delta=0.4)


@pytest.fixture
def closed_instance():
    """Projective measurement of a closed four-level system."""
    return build_closed_system(dim=4, rank=2, seed=5)


@pytest.fixture
def two_peripheral_instance():
    """Instance with peripheral eigenvalues 1 and -1."""
    return build_two_peripheral(dim=5, seed=2, delta=0.3, scale=0.5)
