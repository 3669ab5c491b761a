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
Module providing dense complex linear algebra primitives.

.. currentmodule:: zenolab.linalg

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   as_complex_matrix
   operator_norm
   vector_norm
   trace_norm
   hermitian_defect
   matrix_exp
   resolvent
   eig
   eigvals
   random_unitary
   random_isometry
   random_hermitian
   random_projector
   random_contraction
   random_pure_state
   random_density_matrix

Exceptions
-----------

.. autosummary::
   :toctree: ../stubs/

   ResolventSingularError

"""
from .core import (
    as_complex_matrix,
    eig,
    eigvals,
    hermitian_defect,
    matrix_exp,
    operator_norm,
    resolvent,
    trace_norm,
    vector_norm,
)
from .exceptions import ResolventSingularError
from .random import (
    random_contraction,
    random_density_matrix,
    random_hermitian,
    random_isometry,
    random_projector,
    random_pure_state,
    random_unitary,
)
