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
This module contains the Chernoff estimates and the Trotter product measurements.

.. currentmodule:: zenolab.chernoff

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   chernoff_sqrt_n
   chernoff_modified
   chernoff_approx_modified
   product_formula_bound
   trotter_error
   trotter_envelope
   trotter_rate

"""
from .lemmas import (
    chernoff_approx_modified,
    chernoff_modified,
    chernoff_sqrt_n,
    product_formula_bound,
)
from .trotter import trotter_envelope, trotter_error, trotter_rate
