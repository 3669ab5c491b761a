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
Module building seeded random Zeno instances for each bound form.

All instances act on state vectors and are measured in the spectral norm.

"""
import numpy as np

from zenolab.exceptions import InvalidInputError
from zenolab.linalg import random_hermitian, random_unitary
from zenolab.semigroups import make_explicit_generator, make_hamiltonian_generator
from zenolab.zeno import ZenoInstance, make_zeno_instance


def _check_sizes(dim: int, rank: int) -> None:
    if dim < 2:
        raise InvalidInputError(f"Dimension must be at least 2, got {dim}.")
    if not 1 <= rank < dim:
        raise InvalidInputError(f"Rank must lie in [1, {dim - 1}], got {rank}.")


def _frames(dim: int, rank: int, rng: np.random.Generator):
    frame = random_unitary(dim, rng)
    kept, rest = frame[:, :rank], frame[:, rank:]
    return kept @ kept.conj().T, rest


def build_closed_system(
    dim: int = 4, rank: int = 2, seed: int = 0, t: float = 1.0, scale: float = 1.0
) -> ZenoInstance:
    """Projective measurement M = P of a closed system with L = -iH and ‖H‖ = ``scale``."""
    _check_sizes(dim, rank)
    rng = np.random.default_rng(seed)
    projection, _ = _frames(dim, rank, rng)
    generator = make_hamiltonian_generator(random_hermitian(dim, rng, scale))
    return make_zeno_instance(
        projection,
        generator,
        t,
        label=f"closed-system-{dim}-s{seed}",
        params={"dim": dim, "rank": rank, "seed": seed, "t": t, "scale": scale},
    )


def build_thm1_random(
    dim: int = 4,
    rank: int = 2,
    seed: int = 0,
    delta: float = 0.5,
    t: float = 1.0,
    dissipation: float = 0.2,
    scale: float = 1.0,
) -> ZenoInstance:
    """Instance with ‖Mⁿ - P‖ ≤ δⁿ: M = P + δP⊥UP⊥ and L = -iH - K with K ≥ 0.

    Args:
        dim: Dimension.
        rank: Rank of P.
        seed: Random seed.
        delta: Contraction of the complement, in [0, 1).
        t: Total evolution time.
        dissipation: ‖K‖.
        scale: ‖H‖.
    """
    _check_sizes(dim, rank)
    if not 0 <= delta < 1:
        raise InvalidInputError(f"delta must lie in [0, 1), got {delta}.")
    rng = np.random.default_rng(seed)
    projection, rest = _frames(dim, rank, rng)
    rotation = random_unitary(dim - rank, rng)
    m = projection + delta * rest @ rotation @ rest.conj().T

    hamiltonian = random_hermitian(dim, rng, scale)
    root = random_hermitian(dim, rng, 1.0)
    damping = dissipation * root @ root
    generator = make_explicit_generator(-1j * hamiltonian - damping)
    return make_zeno_instance(
        m,
        generator,
        t,
        label=f"thm1-random-{dim}-s{seed}",
        params={"dim": dim, "rank": rank, "seed": seed, "delta": delta, "t": t},
    )


def build_uniform_random(
    dim: int = 4,
    rank: int = 1,
    seed: int = 0,
    t: float = 1.0,
    rho: float = 0.5,
    scale: float = 1.0,
) -> ZenoInstance:
    """Instance with ‖Mⁿ - P‖ ≤ c̃δⁿ and typically c̃ > 1: M = P + P⊥AP⊥.

    A is a non-normal contraction with ‖A‖ = 1 and spectral radius at most ``rho``.
    """
    _check_sizes(dim, rank)
    if not 0 < rho < 1:
        raise InvalidInputError(f"rho must lie in (0, 1), got {rho}.")
    rng = np.random.default_rng(seed)
    projection, rest = _frames(dim, rank, rng)
    size = dim - rank
    moduli = rng.uniform(rho / 2, rho, size)
    phases = np.exp(2j * np.pi * rng.uniform(size=size))
    upper = np.triu(rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size)), 1)
    triangular = np.diag(moduli * phases) + upper
    triangular /= max(1.0, np.linalg.norm(triangular, 2))
    m = projection + rest @ triangular @ rest.conj().T

    generator = make_hamiltonian_generator(random_hermitian(dim, rng, scale))
    return make_zeno_instance(
        m,
        generator,
        t,
        label=f"uniform-random-{dim}-s{seed}",
        params={"dim": dim, "rank": rank, "seed": seed, "t": t, "rho": rho},
    )


def build_two_peripheral(
    dim: int = 4, seed: int = 0, delta: float = 0.5, t: float = 1.0, scale: float = 1.0
) -> ZenoInstance:
    """Instance with peripheral eigenvalues 1 and -1: M = P₁ - P₂ + δ·W U Wᴴ.

    P₁ and P₂ are orthogonal projections of equal rank ⌊(dim - 1)/2⌋ and W spans the
    remaining directions.
    """
    if dim < 3:
        raise InvalidInputError(f"Dimension must be at least 3, got {dim}.")
    if not 0 <= delta < 1:
        raise InvalidInputError(f"delta must lie in [0, 1), got {delta}.")
    rng = np.random.default_rng(seed)
    rank = (dim - 1) // 2
    frame = random_unitary(dim, rng)
    first, second, rest = frame[:, :rank], frame[:, rank : 2 * rank], frame[:, 2 * rank :]
    rotation = random_unitary(dim - 2 * rank, rng)
    m = (
        first @ first.conj().T
        - second @ second.conj().T
        + delta * rest @ rotation @ rest.conj().T
    )
    generator = make_hamiltonian_generator(random_hermitian(dim, rng, scale))
    return make_zeno_instance(
        m,
        generator,
        t,
        label=f"two-peripheral-{dim}-s{seed}",
        params={"dim": dim, "seed": seed, "delta": delta, "t": t},
    )
