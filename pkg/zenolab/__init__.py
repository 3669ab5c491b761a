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
This top level module contains the main zenolab public functionality.

.. currentmodule:: zenolab

Functions
----------

.. autosummary::
   :toctree: ../stubs/

   about
   get_tolerances
   load_tolerances

Classes
--------

.. autosummary::
   :toctree: ../stubs/

   Tolerances
   InequalityReport

Exceptions
-----------

.. autosummary::
   :toctree: ../stubs/

   ZenoLabError
   InvalidInputError
   NumericalFailureError
   ResourceLimitError

"""
from . import _warnings
from ._about import about
from ._inequality import InequalityReport
from ._version import __version__
from .config import Tolerances, get_tolerances, load_tolerances
from .exceptions import InvalidInputError, NumericalFailureError, ResourceLimitError, ZenoLabError
