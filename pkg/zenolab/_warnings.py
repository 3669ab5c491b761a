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
Module defining warning categories and top-level warning filters.

"""
import warnings


class ZenoLabWarning(UserWarning):
    """Base category for warnings emitted by zenolab."""


class EpsilonExceededWarning(ZenoLabWarning):
    """Step size t/n lies beyond the semicontinuity radius; bounds are not guaranteed."""


class TruncationWarning(ZenoLabWarning):
    """Results come from a finite truncation of an infinite-dimensional model."""


class NonContractiveWarning(ZenoLabWarning):
    """An operator exceeds norm one in the measurement norm; bounds are not certified."""


# scipy reports ill-conditioned solves itself; the resolvent checks conditioning first.
warnings.filterwarnings("ignore", message=".*Ill-conditioned matrix.*")
# Warn once per call site rather than on every sweep point.
warnings.simplefilter("default", ZenoLabWarning)
