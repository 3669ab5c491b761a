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
Module defining exceptions for errors raised by dense linear algebra primitives.

"""
from zenolab.exceptions import NumericalFailureError


class ResolventSingularError(NumericalFailureError):
    """Class for errors raised when z lies (numerically) in the spectrum of A."""

    def __init__(self, z: complex, condition: float):
        message = (
            f"Resolvent R(z, A) is singular at z = {complex(z)}: "
            f"condition number of (z - A) is {condition:.3e}."
        )
        super().__init__(message)
        self.z = complex(z)
        self.condition = condition
