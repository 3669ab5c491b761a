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
Module building random quantum channels and estimating their power-convergence
constants from relative-entropy contraction.

"""
import logging
from typing import NamedTuple, Optional

import numpy as np
import scipy.linalg

from zenolab.exceptions import InvalidInputError
from zenolab.linalg import (
    as_complex_matrix,
    operator_norm,
    random_density_matrix,
    random_isometry,
    random_pure_state,
)
from zenolab.semigroups import (
    GeneratorSpec,
    apply_superoperator,
    hilbert_dimension,
    kraus_to_superoperator,
)
from zenolab.zeno import NormKind, ZenoInstance, make_zeno_instance

from .exceptions import EstimationFailureError, ScenarioBuildError

logger = logging.getLogger(__name__)

EIGENVALUE_FLOOR = 1e-14
SUPPORT_TOL = 1e-12
NILPOTENT_MAX = 1e-8


def random_stinespring_channel(dim: int, env_dim: int, rng: np.random.Generator) -> np.ndarray:
    """Superoperator of ρ ↦ tr_E(VρVᴴ) for a Haar-random isometry V: C^d → C^d ⊗ C^e."""
    isometry = random_isometry(dim * env_dim, dim, rng)
    kraus = [isometry[k * dim : (k + 1) * dim, :] for k in range(env_dim)]
    return kraus_to_superoperator(kraus)


def build_random_cptp(
    dim: int,
    env_dim: int,
    seed: int,
    g: GeneratorSpec,
    t: float = 1.0,
    norm_kind: NormKind = NormKind.HERMITIAN_1TO1_SAMPLED,
) -> ZenoInstance:
    """Zeno instance of a Haar-random Stinespring channel.

    Raises:
        InvalidInputError: If ``dim`` < 2, ``env_dim`` < 1 or ``g`` has the wrong size.
        ScenarioBuildError: If 1 is not a peripheral eigenvalue or a peripheral
            quasinilpotent part exceeds 1e-8.
    """
    if dim < 2 or env_dim < 1:
        raise InvalidInputError(f"Need dim >= 2 and env_dim >= 1, got {dim} and {env_dim}.")
    if g.size != dim**2:
        raise InvalidInputError(f"Generator acts on size {g.size}, expected {dim**2}.")
    rng = np.random.default_rng(seed)
    m = random_stinespring_channel(dim, env_dim, rng)
    label = f"random-cptp-{dim}x{env_dim}-s{seed}"
    inst = make_zeno_instance(
        m,
        g,
        t,
        norm_kind=norm_kind,
        label=label,
        params={"dim": dim, "env_dim": env_dim, "seed": seed, "t": t},
        n_max=128,
    )
    spectrum = inst.spectrum
    if not any(abs(lam - 1) <= 1e-8 for lam in spectrum.eigenvalues):
        raise ScenarioBuildError(label, "eigenvalue 1 in the spectrum")
    if max(spectrum.nilpotent_norms, default=0.0) > NILPOTENT_MAX:
        raise ScenarioBuildError(label, "vanishing peripheral nilpotent parts")
    return inst


def pinching_superoperator(dim: int) -> np.ndarray:
    """Superoperator of the conditional expectation onto diagonal matrices."""
    basis = np.eye(dim)
    return kraus_to_superoperator([np.outer(basis[i], basis[i]) for i in range(dim)])


def relative_entropy(rho, sigma) -> Optional[float]:
    """Umegaki relative entropy D(ρ‖σ) = tr ρ(log ρ - log σ) in nats.

    Eigenvalues below 1e-14 are treated as zero before taking logarithms.

    Returns:
        float or None: The relative entropy, or None if supp ρ ⊄ supp σ.
    """
    rho = as_complex_matrix(rho, "rho", square=True)
    sigma = as_complex_matrix(sigma, "sigma", square=True)
    rho_vals = scipy.linalg.eigh((rho + rho.conj().T) / 2, eigvals_only=True)
    sigma_vals, sigma_vecs = scipy.linalg.eigh((sigma + sigma.conj().T) / 2)

    support = sigma_vals > EIGENVALUE_FLOOR
    weights = np.real(np.einsum("ij,jk,ki->i", sigma_vecs.conj().T, rho, sigma_vecs))
    if np.sum(weights[~support]) > SUPPORT_TOL:
        return None

    positive = rho_vals[rho_vals > EIGENVALUE_FLOOR]
    entropy_term = float(np.sum(positive * np.log(positive)))
    cross_term = float(np.sum(weights[support] * np.log(sigma_vals[support])))
    return max(entropy_term - cross_term, 0.0)


class SdpiCertificate(NamedTuple):
    """Per-step rate √δ̂ and constant c̃ estimated from relative-entropy contraction."""

    delta: float
    c_tilde: float


def build_sdpi_certificate(m, p, states: int = 512, seed: int = 0) -> SdpiCertificate:
    """Estimate (δ, c̃) of ‖Mⁿ - P‖ ≤ c̃δⁿ from a strong data processing inequality.

    δ̂ is the largest sampled ratio D(M(ρ)‖MP(ρ))/D(ρ‖P(ρ)) over ``states`` Haar-random
    pure states and ``states // 4`` random full-rank states, and
    c̃ = √2·(max D(ρ‖P(ρ)))^{1/2}. The per-step rate is √δ̂.

    Args:
        m: CPTP superoperator M.
        p: Superoperator of a conditional expectation P with MP = PM.
        states: Number of sampled pure states.
        seed: Seed of the sampling generator.

    Raises:
        InvalidInputError: If MP ≠ PM.
        EstimationFailureError: If every sample is discarded.
    """
    m = as_complex_matrix(m, "m", square=True)
    p = as_complex_matrix(p, "p", square=True)
    if operator_norm(m @ p - p @ m) > 1e-9:
        raise InvalidInputError("M and P must commute.")
    dim = hilbert_dimension(m)
    rng = np.random.default_rng(seed)

    samples = []
    for _ in range(states):
        psi = random_pure_state(dim, rng)
        samples.append(np.outer(psi, psi.conj()))
    samples += [random_density_matrix(dim, rng) for _ in range(states // 4)]

    ratio, divergence, used = 0.0, 0.0, 0
    for rho in samples:
        projected = apply_superoperator(p, rho)
        denominator = relative_entropy(rho, projected)
        numerator = relative_entropy(apply_superoperator(m, rho), apply_superoperator(m, projected))
        if denominator is None or numerator is None or denominator <= SUPPORT_TOL:
            continue
        used += 1
        ratio = max(ratio, numerator / denominator)
        divergence = max(divergence, denominator)
    if used == 0:
        raise EstimationFailureError("Every sampled state was discarded in the SDPI estimate.")

    logger.info("SDPI estimate from %d of %d samples: ratio %.6g", used, len(samples), ratio)
    return SdpiCertificate(delta=float(np.sqrt(ratio)), c_tilde=float(np.sqrt(2 * divergence)))
