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
Module providing error series that do not come from a Zeno instance.

"""
from typing import Sequence, Tuple

import numpy as np

from zenolab.exceptions import InvalidInputError
from zenolab.semigroups import GeneratorSpec, Picture, make_hamiltonian_generator
from zenolab.zeno.rates import ErrorSeries, SeriesEntry

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

TROTTER_KINDS = ("pauli", "commuting")


def build_trotter_pair(kind: str = "pauli") -> Tuple[GeneratorSpec, GeneratorSpec]:
    """Pair of qubit generators ρ ↦ -i[H, ρ] for Trotter measurements.

    ``pauli`` uses H₁ = σ_x and H₂ = σ_z; ``commuting`` uses H₁ = σ_z and H₂ = σ_z/2.
    """
    if kind == "pauli":
        first, second = PAULI_X, PAULI_Z
    elif kind == "commuting":
        first, second = PAULI_Z, PAULI_Z / 2
    else:
        raise InvalidInputError(f"Unknown Trotter pair '{kind}'; expected one of {TROTTER_KINDS}.")
    return (
        make_hamiltonian_generator(first, Picture.DENSITY_MATRIX),
        make_hamiltonian_generator(second, Picture.DENSITY_MATRIX),
    )


def build_synthetic_series(
    exponent: float = -1.0,
    n_grid: Sequence[int] = (16, 32, 64, 128, 256, 512, 1024),
    prefactor: float = 1.0,
) -> ErrorSeries:
    """Exact power law error(n) = prefactor·n^exponent."""
    if prefactor <= 0:
        raise InvalidInputError(f"Prefactor must be positive, got {prefactor}.")
    entries = tuple(SeriesEntry(n=int(n), error=prefactor * float(n) ** exponent) for n in n_grid)
    return ErrorSeries(entries=entries, t=1.0, instance_label=f"synthetic-n^{exponent:g}")
