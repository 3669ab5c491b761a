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
Unit tests for the scenario registry.

"""
import numpy as np
import pytest

from zenolab.exceptions import InvalidInputError
from zenolab.scenarios import (
    SCENARIOS,
    ScenarioNotFoundError,
    get_scenario,
    list_scenarios,
    scenario_defaults,
)
from zenolab.zeno import ZenoInstance


def test_registered_names():
    """Test that every scenario family is registered."""
    assert list_scenarios() == sorted(
        [
            "optimality",
            "depolarizing",
            "random-cptp",
            "truncated-oscillator",
            "closed-system",
            "thm1-random",
            "uniform-random",
            "two-peripheral",
            "trotter-pair",
            "synthetic-series",
        ]
    )
    assert set(SCENARIOS) == set(list_scenarios())


def test_scenario_defaults():
    """Test that defaults are read from the builder signature."""
    assert scenario_defaults("optimality") == {"delta": 0.5, "t": 1.0}
    assert scenario_defaults("trotter-pair") == {"kind": "pauli"}


def test_unknown_scenario():
    """Test that an unknown name lists the available scenarios."""
    with pytest.raises(ScenarioNotFoundError, match="Scenario 'nope' not found. Available"):
        get_scenario("nope")


def test_unknown_parameter():
    """Test that parameters unknown to the builder are rejected."""
    with pytest.raises(InvalidInputError, match="Unknown parameter\\(s\\) for scenario"):
        get_scenario("optimality", gamma=1.0)


def test_parameters_are_completed():
    """Test that given parameters override the defaults."""
    spec = get_scenario("closed-system", seed=7)
    assert spec.parameters == {"dim": 4, "rank": 2, "seed": 7, "t": 1.0, "scale": 1.0}
    assert spec.name == "closed-system"


def test_builds_are_reproducible():
    """Test that equal parameters build identical instances."""
    first = get_scenario("thm1-random", seed=11).build()
    second = get_scenario("thm1-random", seed=11).build()
    assert isinstance(first, ZenoInstance)
    np.testing.assert_array_equal(first.m, second.m)
    np.testing.assert_array_equal(first.generator.superoperator, second.generator.superoperator)


def test_seeds_change_instances():
    """Test that different seeds build different instances."""
    first = get_scenario("uniform-random", seed=0).build()
    second = get_scenario("uniform-random", seed=1).build()
    assert not np.allclose(first.m, second.m)
