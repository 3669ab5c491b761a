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
Module defining exceptions for errors raised by the contour-integral spectral calculus.

"""
from typing import TYPE_CHECKING, Optional

from zenolab.exceptions import NumericalFailureError

if TYPE_CHECKING:
    from .contour import Contour


class SpectralCalculusError(NumericalFailureError):
    """Base class for errors raised by the spectral calculus."""


class ContourThroughSpectrumError(SpectralCalculusError):
    """Class for errors raised when a contour passes through (or too close to) the spectrum."""

    def __init__(self, contour: "Contour", eigenvalue: Optional[complex] = None):
        location = "" if eigenvalue is None else f" near eigenvalue {complex(eigenvalue)}"
        message = (
            f"Contour with center {contour.center} and radius {contour.radius} "
            f"passes through the spectrum{location}."
        )
        super().__init__(message)
        self.eigenvalue = eigenvalue


class QuadratureFailureError(SpectralCalculusError):
    """Class for errors raised when adaptive contour quadrature exhausts its node budget."""

    def __init__(self, nodes: int, change: float):
        message = (
            f"Contour quadrature did not converge with {nodes} nodes "
            f"(last refinement changed the result by {change:.3e})."
        )
        super().__init__(message)
        self.nodes = nodes
        self.change = change


class NotPowerConvergentError(SpectralCalculusError):
    """Class for errors raised when a contraction is not uniformly power convergent."""
