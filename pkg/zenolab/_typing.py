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
Module defining type aliases shared across zenolab:

  * ComplexMatrix: dense complex two-dimensional array carrying operators and superoperators

  * Vector: one-dimensional complex array

  * MatrixFunction: map from a real parameter to a ComplexMatrix

"""
from typing import Callable

import numpy as np

ComplexMatrix = np.ndarray
Vector = np.ndarray
MatrixFunction = Callable[[float], np.ndarray]
