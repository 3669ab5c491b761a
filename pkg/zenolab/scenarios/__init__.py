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
This module contains the named, reproducible scenario families.

.. currentmodule:: zenolab.scenarios

Classes
--------

.. autosummary::
   :toctree: ../stubs/

   ScenarioSpec
   SdpiCertificate

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   get_scenario
   list_scenarios
   scenario_defaults
   build_optimality_example
   build_depolarizing
   build_truncated_oscillator
   build_random_cptp
   build_sdpi_certificate
   build_closed_system
   build_thm1_random
   build_uniform_random
   build_two_peripheral
   build_trotter_pair
   build_synthetic_series
   depolarizing_superoperator
   pinching_superoperator
   relative_entropy
   random_stinespring_channel

Exceptions
-----------

.. autosummary::
   :toctree: ../stubs/

   ScenarioError
   ScenarioNotFoundError
   ScenarioBuildError
   EstimationFailureError

"""
from .channels import (
    SdpiCertificate,
    build_random_cptp,
    build_sdpi_certificate,
    pinching_superoperator,
    random_stinespring_channel,
    relative_entropy,
)
from .examples import (
    build_depolarizing,
    build_optimality_example,
    build_truncated_oscillator,
    depolarizing_superoperator,
)
from .exceptions import (
    EstimationFailureError,
    ScenarioBuildError,
    ScenarioError,
    ScenarioNotFoundError,
)
from .families import (
    build_closed_system,
    build_thm1_random,
    build_two_peripheral,
    build_uniform_random,
)
from .registry import SCENARIOS, ScenarioSpec, get_scenario, list_scenarios, scenario_defaults
from .series_sources import build_synthetic_series, build_trotter_pair
