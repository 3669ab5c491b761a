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
Module defining exceptions for errors raised by zenolab.

"""


class ZenoLabError(Exception):
    """Base class for errors raised by zenolab."""


class InvalidInputError(ValueError, ZenoLabError):
    """Class for errors raised when an argument violates a documented precondition."""


class NumericalFailureError(ZenoLabError):
    """Class for errors raised when a numerical routine breaks down."""


class ResourceLimitError(ZenoLabError):
    """Class for errors raised when a request exceeds a computational resource cap."""

    def __init__(self, resource: str, requested: int, limit: int):
        message = f"Requested {resource} of {requested} exceeds the limit of {limit}."
        super().__init__(message)
        self.requested = requested
        self.limit = limit
