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
Module defining exceptions for errors raised while building scenarios.

"""
from typing import Iterable

from zenolab.exceptions import NumericalFailureError, ZenoLabError


class ScenarioError(ZenoLabError):
    """Base class for errors raised by scenario builders."""


class ScenarioNotFoundError(ScenarioError):
    """Class for errors raised when a scenario name is not registered."""

    def __init__(self, name: str, available: Iterable[str] = ()):
        message = f"Scenario '{name}' not found."
        available = sorted(available)
        if available:
            message += f" Available scenarios: {', '.join(available)}."
        super().__init__(message)
        self.name = name


class ScenarioBuildError(ScenarioError, NumericalFailureError):
    """Class for errors raised when a built instance fails one of its self-checks."""

    def __init__(self, scenario: str, check: str, detail: str = ""):
        message = f"Scenario '{scenario}' failed its self-check '{check}'."
        if detail:
            message += f" {detail}"
        super().__init__(message)
        self.scenario = scenario
        self.check = check


class EstimationFailureError(ScenarioError, NumericalFailureError):
    """Class for errors raised when every sample of a statistical estimate was discarded."""
