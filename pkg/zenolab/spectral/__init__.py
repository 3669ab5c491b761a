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
Module providing the holomorphic functional calculus by contour quadrature:
spectral projections, quasinilpotent parts, perturbed projections and the
classification of uniformly power convergent contractions.

.. currentmodule:: zenolab.spectral

Classes
--------

.. autosummary::
   :toctree: ../stubs/

   Contour
   PeripheralSpectrum
   PerturbationData

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   contour_integral
   spectral_projection
   quasinilpotent
   projection_derivative
   classify_power_convergence
   cluster_eigenvalues
   semicontinuity_epsilon
   perturbed_projection
   check_perturbed_projection_bounds

Exceptions
-----------

.. autosummary::
   :toctree: ../stubs/

   SpectralCalculusError
   ContourThroughSpectrumError
   QuadratureFailureError
   NotPowerConvergentError

"""
from .contour import (
    Contour,
    check_separation,
    contour_integral,
    integrate_on_contour,
    projection_derivative,
    quasinilpotent,
    spectral_projection,
)
from .exceptions import (
    ContourThroughSpectrumError,
    NotPowerConvergentError,
    QuadratureFailureError,
    SpectralCalculusError,
)
from .peripheral import PeripheralSpectrum, classify_power_convergence, cluster_eigenvalues
from .perturbation import (
    PerturbationData,
    check_perturbed_projection_bounds,
    perturbed_projection,
    semicontinuity_epsilon,
    sup_perturbation_norm,
)
