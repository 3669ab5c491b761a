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
Module defining the numerical tolerances shared by every zenolab routine.

Defaults can be overridden from an INI file with a ``[tolerances]`` section, e.g.

.. code-block:: ini

    [tolerances]
    peripheral_tol = 1e-7
    quadrature_max_nodes = 8192

The file is read from ``~/.zenolab/zenolabrc`` unless the ``ZENOLAB_CONFIG``
environment variable points elsewhere.

"""
import configparser
import dataclasses
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .exceptions import InvalidInputError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(os.path.expanduser("~"), ".zenolab", "zenolabrc")
DEFAULT_CONFIG_SECTION = "tolerances"


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances and resource caps.

    Attributes:
        svd_max_dim: Largest dimension for which operator norms use a full SVD.
        power_iteration_tol: Relative convergence tolerance of the power iteration on AᴴA.
        power_iteration_max: Iteration cap of the power iteration.
        resolvent_cond_cap: Condition number of (z - A) above which z counts as spectral.
        eig_max_dim: Largest dimension accepted by dense eigendecompositions.
        contraction_tol: Allowed excess over 1 in contractivity certificates.
        hermitian_tol: Allowed Hermiticity defect of Hamiltonians.
        cptp_tol: Allowed trace and positivity defect of quantum channels.
        peripheral_tol: Membership tolerance of the unit circle and eigenvalue cluster radius.
        contour_tol: Relative distance below which an eigenvalue lies on a contour.
        quadrature_tol: Convergence threshold of adaptive contour quadrature.
        quadrature_max_nodes: Node cap of adaptive contour quadrature.
        nilpotent_max: Largest peripheral quasinilpotent norm accepted as zero.
        error_floor: Errors below this value are excluded from rate fits.
        slack_tol: Allowed negative slack of an inequality report.
    """

    svd_max_dim: int = 512
    power_iteration_tol: float = 1e-12
    power_iteration_max: int = 10_000
    resolvent_cond_cap: float = 1e12
    eig_max_dim: int = 512
    contraction_tol: float = 1e-9
    hermitian_tol: float = 1e-12
    cptp_tol: float = 1e-10
    peripheral_tol: float = 1e-8
    contour_tol: float = 1e-10
    quadrature_tol: float = 1e-11
    quadrature_max_nodes: int = 4096
    nilpotent_max: float = 1e-6
    error_floor: float = 1e-12
    slack_tol: float = 1e-9


def load_tolerances(filepath: Optional[str] = None) -> Tolerances:
    """Read tolerance overrides from an INI file.

    Args:
        filepath: Path of the configuration file. Missing files yield the defaults.

    Returns:
        Tolerances: defaults updated with the values of the ``[tolerances]`` section.

    Raises:
        InvalidInputError: If the section names an unknown tolerance or a value does not parse.
    """
    filepath = filepath or os.getenv("ZENOLAB_CONFIG") or DEFAULT_CONFIG_PATH
    if not os.path.isfile(filepath):
        return Tolerances()

    config = configparser.ConfigParser()
    config.read(filepath)
    if DEFAULT_CONFIG_SECTION not in config.sections():
        return Tolerances()

    fields = {field.name: field.type for field in dataclasses.fields(Tolerances)}
    overrides = {}
    for key, raw in config[DEFAULT_CONFIG_SECTION].items():
        if key not in fields:
            raise InvalidInputError(f"Unknown tolerance '{key}' in {filepath}.")
        cast = int if fields[key] in (int, "int") else float
        try:
            overrides[key] = cast(float(raw)) if cast is int else cast(raw)
        except ValueError as err:
            raise InvalidInputError(f"Tolerance '{key}' has non-numeric value '{raw}'.") from err

    logger.info("Loaded %d tolerance override(s) from %s", len(overrides), filepath)
    return dataclasses.replace(Tolerances(), **overrides)


@lru_cache(maxsize=1)
def get_tolerances() -> Tolerances:
    """Returns the process-wide tolerances, loading overrides on first use."""
    return load_tolerances()
