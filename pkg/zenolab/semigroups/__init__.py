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
Module for constructing contraction-semigroup generators and checking semigroup identities.

.. currentmodule:: zenolab.semigroups

Classes
--------

.. autosummary::
   :toctree: ../stubs/

   GeneratorSpec
   GeneratorKind
   Picture

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   make_hamiltonian_generator
   make_lindblad_generator
   make_explicit_generator
   random_hamiltonian_generator
   random_lindblad_generator
   lindblad_superoperator
   evolve
   check_integral_equation
   check_perturbation_bound
   vec
   unvec
   superoperator_from_sandwich
   commutator_superoperator
   kraus_to_superoperator
   apply_superoperator
   choi_matrix
   is_cptp
   hilbert_dimension

"""
from .generator import (
    CERTIFICATE_TIMES,
    GeneratorKind,
    GeneratorSpec,
    Picture,
    lindblad_superoperator,
    make_explicit_generator,
    make_hamiltonian_generator,
    make_lindblad_generator,
    random_hamiltonian_generator,
    random_lindblad_generator,
)
from .identities import check_integral_equation, check_perturbation_bound, evolve
from .superoperators import (
    apply_superoperator,
    choi_matrix,
    commutator_superoperator,
    hilbert_dimension,
    is_cptp,
    kraus_to_superoperator,
    superoperator_from_sandwich,
    unvec,
    vec,
)
