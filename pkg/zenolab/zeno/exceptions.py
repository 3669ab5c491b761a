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
Module defining exceptions for errors raised by the Zeno engine.

"""
from zenolab.exceptions import InvalidInputError, ZenoLabError


class ZenoEngineError(ZenoLabError):
    """Base class for errors raised by the Zeno engine."""


class HypothesisViolationError(InvalidInputError, ZenoEngineError):
    """Class for errors raised when an instance violates the hypotheses of a bound or lemma."""

    def __init__(self, hypothesis: str, detail: str = ""):
        message = f"Hypothesis violated: {hypothesis}."
        if detail:
            message += f" {detail}"
        super().__init__(message)
        self.hypothesis = hypothesis


class TooFewPointsError(ZenoEngineError):
    """Class for errors raised when a rate fit has too few usable points."""

    def __init__(self, usable: int, required: int = 4):
        message = f"Rate fit needs at least {required} points above the error floor, got {usable}."
        super().__init__(message)
        self.usable = usable
