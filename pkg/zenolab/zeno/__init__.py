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
This module contains the Zeno engine: products, limits, error series, explicit bounds,
the counting identity and the per-term estimate checkers.

.. currentmodule:: zenolab.zeno

Classes
--------

.. autosummary::
   :toctree: ../stubs/

   NormKind
   ZenoInstance
   BoundKind
   BoundCertificate
   ZenoConstants
   SeriesEntry
   ErrorSeries
   RateFit
   ChernoffMaps

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   make_zeno_instance
   instance_norm
   sampled_one_to_one_norm
   zeno_step
   zeno_product
   naive_zeno_product
   zeno_limit
   zeno_error
   zeno_error_series
   zeno_condition_constants
   leakage_constant
   power_rate
   power_constant
   evaluate_bound_thm1
   evaluate_bound_uniform
   evaluate_bound_closed_system
   certify_bound
   boost_power_convergence
   counting_closed_form
   counting_brute_force
   counting_table
   max_transitions
   check_excursion_estimate
   check_chernoff_estimate
   check_exponential_estimate
   check_telescoping
   rate_fit
   zeno_epsilon
   peripheral_chernoff_maps

Exceptions
-----------

.. autosummary::
   :toctree: ../stubs/

   ZenoEngineError
   HypothesisViolationError
   TooFewPointsError

"""
from .bounds import (
    BoundCertificate,
    BoundKind,
    ZenoConstants,
    boost_power_convergence,
    certify_bound,
    evaluate_bound_closed_system,
    evaluate_bound_thm1,
    evaluate_bound_uniform,
    leakage_constant,
    power_constant,
    power_rate,
    zeno_condition_constants,
)
from .counting import (
    counting_brute_force,
    counting_closed_form,
    counting_table,
    max_transitions,
)
from .exceptions import HypothesisViolationError, TooFewPointsError, ZenoEngineError
from .instance import (
    NormKind,
    ZenoInstance,
    instance_norm,
    make_zeno_instance,
    sampled_one_to_one_norm,
)
from .lemmas import (
    check_chernoff_estimate,
    check_excursion_estimate,
    check_exponential_estimate,
    check_telescoping,
)
from .peripheral_maps import ChernoffMaps, peripheral_chernoff_maps, zeno_epsilon
from .product import naive_zeno_product, zeno_limit, zeno_product, zeno_step
from .rates import ErrorSeries, RateFit, SeriesEntry, rate_fit
from .series import zeno_error, zeno_error_series
