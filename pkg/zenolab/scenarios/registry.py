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
Module registering named scenarios whose parameters are plain JSON values.

"""
import inspect
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

import numpy as np

from zenolab.exceptions import InvalidInputError
from zenolab.linalg import random_density_matrix
from zenolab.semigroups import Picture, random_hamiltonian_generator, random_lindblad_generator
from zenolab.zeno import NormKind, ZenoInstance

from .channels import build_random_cptp
from .examples import build_depolarizing, build_optimality_example, build_truncated_oscillator
from .exceptions import ScenarioNotFoundError
from .families import (
    build_closed_system,
    build_thm1_random,
    build_two_peripheral,
    build_uniform_random,
)
from .series_sources import build_synthetic_series, build_trotter_pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScenarioSpec:
    """Named recipe producing a Zeno instance or an error-series source.

    Args:
        name: Registered scenario name.
        parameters: Complete keyword arguments of the builder.
        builder: Deterministic function of ``parameters``.
    """

    name: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    builder: Callable[..., Any] = None

    def build(self):
        """Run the builder; equal parameters give identical results."""
        logger.info("Building scenario '%s' with %s", self.name, self.parameters)
        return self.builder(**self.parameters)


def depolarizing_scenario(
    p: float = 0.75,
    dim: int = 2,
    seed: int = 0,
    t: float = 1.0,
    scale: float = 1.0,
    norm_kind: str = NormKind.HERMITIAN_1TO1_SAMPLED.value,
) -> ZenoInstance:
    """Depolarizing channel toward a random full-rank σ, with a random Hamiltonian."""
    rng = np.random.default_rng(seed)
    sigma = random_density_matrix(dim, rng)
    g = random_hamiltonian_generator(dim, rng, scale, Picture.DENSITY_MATRIX)
    return build_depolarizing(p, sigma, g, t, norm_kind=NormKind(norm_kind))


def random_cptp_scenario(
    dim: int = 3,
    env_dim: int = 2,
    seed: int = 0,
    t: float = 1.0,
    num_jumps: int = 2,
    scale: float = 0.5,
    norm_kind: str = NormKind.HERMITIAN_1TO1_SAMPLED.value,
) -> ZenoInstance:
    """Random Stinespring channel with a random GKLS generator."""
    g = random_lindblad_generator(dim, num_jumps, np.random.default_rng(seed + 1), scale)
    return build_random_cptp(dim, env_dim, seed, g, t, norm_kind=NormKind(norm_kind))


def truncated_oscillator_scenario(
    truncation: int = 16,
    p: float = 0.75,
    t: float = 1.0,
    norm_kind: str = NormKind.HERMITIAN_1TO1_SAMPLED.value,
) -> ZenoInstance:
    """Truncated harmonic oscillator with the default σ."""
    return build_truncated_oscillator(truncation, None, p, t, norm_kind=NormKind(norm_kind))


SCENARIOS: Dict[str, Callable[..., Any]] = {
    "optimality": build_optimality_example,
    "depolarizing": depolarizing_scenario,
    "random-cptp": random_cptp_scenario,
    "truncated-oscillator": truncated_oscillator_scenario,
    "closed-system": build_closed_system,
    "thm1-random": build_thm1_random,
    "uniform-random": build_uniform_random,
    "two-peripheral": build_two_peripheral,
    "trotter-pair": build_trotter_pair,
    "synthetic-series": build_synthetic_series,
}


def list_scenarios() -> List[str]:
    """Returns the registered scenario names."""
    return sorted(SCENARIOS)


def scenario_defaults(name: str) -> Dict[str, Any]:
    """Default parameters of a registered scenario."""
    if name not in SCENARIOS:
        raise ScenarioNotFoundError(name, SCENARIOS)
    signature = inspect.signature(SCENARIOS[name])
    return {
        key: param.default
        for key, param in signature.parameters.items()
        if param.default is not inspect.Parameter.empty
    }


def get_scenario(name: str, **parameters) -> ScenarioSpec:
    """Look up a scenario and complete its parameters with the defaults.

    Raises:
        ScenarioNotFoundError: If ``name`` is not registered.
        InvalidInputError: If a parameter is unknown to the scenario.
    """
    defaults = scenario_defaults(name)
    unknown = sorted(set(parameters) - set(defaults))
    if unknown:
        raise InvalidInputError(
            f"Unknown parameter(s) for scenario '{name}': {', '.join(unknown)}. "
            f"Accepted: {', '.join(sorted(defaults))}."
        )
    return ScenarioSpec(name=name, parameters={**defaults, **parameters}, builder=SCENARIOS[name])
