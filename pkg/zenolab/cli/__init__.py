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
This module contains the ``zeno`` command-line interface: experiment configuration,
report emission and the verification suites.

.. currentmodule:: zenolab.cli

Classes
--------

.. autosummary::
   :toctree: ../stubs/

   ExperimentConfig
   OutputSpec
   ReportRow
   CheckResult

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   main
   cmd_run
   cmd_rates
   cmd_verify
   cmd_spectral
   cmd_counting
   load_config
   validate_config
   parse_n_grid
   resolve_threads
   run_suite

Exceptions
-----------

.. autosummary::
   :toctree: ../stubs/

   ConfigValidationError

"""
from .config import (
    ExperimentConfig,
    OutputSpec,
    load_config,
    parse_n_grid,
    resolve_threads,
    validate_config,
)
from .exceptions import ConfigValidationError
from .main import cmd_counting, cmd_rates, cmd_run, cmd_spectral, cmd_verify, main
from .report import ReportRow
from .verify import CheckResult, run_suite
