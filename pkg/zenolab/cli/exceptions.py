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
Module defining exceptions for errors raised by the command-line runner.

"""
from zenolab.exceptions import InvalidInputError


class ConfigValidationError(InvalidInputError):
    """Class for errors raised when an experiment configuration fails validation."""

    def __init__(self, key: str, message: str):
        super().__init__(f"Invalid configuration at '{key}': {message}")
        self.key = key
