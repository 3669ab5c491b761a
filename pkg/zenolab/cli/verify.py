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
Module running seeded verification sweeps of the inequality checkers and oracles.

Every check is reported as a :class:`CheckResult` with a left side, a right side and a
pass flag; oracle comparisons report the discrepancy as ``lhs`` against a tolerance.

"""
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Dict, Iterator, List

import numpy as np

from zenolab._inequality import InequalityReport
from zenolab.exceptions import NumericalFailureError
from zenolab.chernoff import (
    chernoff_approx_modified,
    chernoff_modified,
    chernoff_sqrt_n,
    product_formula_bound,
    trotter_envelope,
    trotter_error,
    trotter_rate,
)
from zenolab.linalg import (
    matrix_exp,
    operator_norm,
    random_contraction,
    random_hermitian,
    random_pure_state,
)
from zenolab.scenarios import (
    build_thm1_random,
    build_trotter_pair,
    build_two_peripheral,
    random_stinespring_channel,
)
from zenolab.semigroups import Picture, make_hamiltonian_generator
from zenolab.spectral import (
    Contour,
    check_perturbed_projection_bounds,
    classify_power_convergence,
    quasinilpotent,
    semicontinuity_epsilon,
    spectral_projection,
    sup_perturbation_norm,
)
from zenolab.zeno import (
    check_chernoff_estimate,
    check_excursion_estimate,
    check_exponential_estimate,
    check_telescoping,
    counting_brute_force,
    counting_closed_form,
    max_transitions,
    peripheral_chernoff_maps,
    rate_fit,
)

logger = logging.getLogger(__name__)

SUITES = ("chernoff", "trotter", "lemmas", "spectral", "counting")
ORACLE_TOL = 1e-10
PERTURBATION_TOL = 1e-8
SLOPE_WINDOW = (-1.15, -0.85)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check of a verification suite."""

    check: str
    trial: int
    lhs: float
    rhs: float
    passed: bool
    witness: Dict[str, Any] = field(default_factory=dict)

    @property
    def slack(self) -> float:
        """Returns ``rhs - lhs``."""
        return self.rhs - self.lhs


def _from_report(check: str, trial: int, report: InequalityReport, tol=None) -> CheckResult:
    return CheckResult(
        check=check,
        trial=trial,
        lhs=report.lhs,
        rhs=report.rhs,
        passed=report.holds(tol),
        witness=report.witness,
    )


def _tolerance(check: str, trial: int, error: float, tol: float, **witness) -> CheckResult:
    return CheckResult(check, trial, float(error), tol, bool(error <= tol), witness)


def _unit_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    return random_pure_state(dim, rng)


def chernoff_suite(seed: int, trials: int) -> Iterator[CheckResult]:
    """Chernoff estimates on random contractions, product formulas and peripheral maps."""
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        dim = int(rng.integers(2, 9))
        c = random_contraction(dim, rng, rng.uniform(0.5, 1.0))
        n = int(rng.integers(1, 257))
        x = _unit_vector(dim, rng)
        yield _from_report("chernoff-sqrt-n", trial, chernoff_sqrt_n(c, n, x))
        yield _from_report("chernoff-modified", trial, chernoff_modified(c, n, x))

        small = int(rng.integers(2, 5))
        first = -1j * random_hermitian(small, rng)
        second = -1j * random_hermitian(small, rng)

        def trotter_step(s: float, a=first, b=second) -> np.ndarray:
            return matrix_exp(s * a) @ matrix_exp(s * b)

        report = product_formula_bound(trotter_step, first + second, 1.0, n)
        yield _from_report("product-formula", trial, report)

        inst = build_two_peripheral(int(rng.integers(3, 6)), seed + trial, 0.3, 1.0, 0.5)
        steps = int(rng.choice([16, 64, 256]))
        for j in range(inst.spectrum.num_peripheral):
            maps = peripheral_chernoff_maps(inst, j, steps)
            report = chernoff_approx_modified(*maps, steps)
            yield _from_report("chernoff-approx-modified", trial, report)
            tier = report.witness["tier"]
            yield CheckResult(
                "chernoff-approx-tier", trial, report.lhs, tier, report.lhs <= tier + 1e-9
            )


def trotter_suite(seed: int, trials: int) -> Iterator[CheckResult]:
    """Trotter rate on the Pauli pair, exactness on a commuting pair, random envelopes."""
    grid = [2**k for k in range(4, 11)]
    l1, l2 = build_trotter_pair("pauli")
    series = trotter_rate(l1, l2, grid)
    slope = rate_fit(series).slope
    low, high = SLOPE_WINDOW
    yield CheckResult("trotter-slope", 0, slope, high, low <= slope <= high, {"slope": slope})
    for entry in series.entries:
        yield CheckResult(
            "trotter-envelope", 0, entry.error, entry.bound, entry.slack >= -1e-9, {"n": entry.n}
        )

    c1, c2 = build_trotter_pair("commuting")
    for n in grid:
        yield _tolerance("trotter-commuting", 0, trotter_error(c1, c2, n), 1e-12, n=n)

    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        dim = int(rng.integers(2, 4))
        a = make_hamiltonian_generator(random_hermitian(dim, rng), Picture.DENSITY_MATRIX)
        b = make_hamiltonian_generator(random_hermitian(dim, rng), Picture.DENSITY_MATRIX)
        n = int(rng.integers(1, 129))
        error, envelope = trotter_error(a, b, n), trotter_envelope(a, b, n)
        yield CheckResult("trotter-random", trial, error, envelope, error <= envelope + 1e-9)


def lemmas_suite(seed: int, trials: int) -> Iterator[CheckResult]:
    """Per-term estimates and the telescoping decomposition on random instances."""
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        dim = int(rng.integers(3, 7))
        inst = build_thm1_random(
            dim=dim,
            rank=int(rng.integers(1, dim)),
            seed=seed + trial,
            delta=float(rng.uniform(0.1, 0.8)),
            t=float(rng.choice([0.5, 1.0])),
        )
        for n in (8, 32):
            x = _unit_vector(dim, rng)
            yield _from_report("lemma-excursion", trial, check_excursion_estimate(inst, n))
            vector_report = check_excursion_estimate(inst, n, x)
            yield _from_report("lemma-excursion-vector", trial, vector_report)
            yield _from_report("lemma-chernoff", trial, check_chernoff_estimate(inst, n, x))
            yield _from_report("lemma-exponential", trial, check_exponential_estimate(inst, n, x))
            yield _from_report("telescoping", trial, check_telescoping(inst, n, x))


def _diagonalizable(dim: int, rng: np.random.Generator):
    values = np.arange(dim) + 0.2 * (rng.uniform(-1, 1, dim) + 1j * rng.uniform(-1, 1, dim))
    basis = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    basis += dim * np.eye(dim)
    inverse = np.linalg.inv(basis)
    return basis @ np.diag(values) @ inverse, values, basis, inverse


def spectral_suite(seed: int, trials: int) -> Iterator[CheckResult]:
    """Quadrature projections against eigenvectors, Jordan nilpotents, CPTP peripheral
    structure and perturbed-projection bounds."""
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        dim = int(rng.integers(2, 7))
        a, values, basis, inverse = _diagonalizable(dim, rng)
        k = int(rng.integers(dim))
        contour = Contour(values[k], 0.25)
        reference = np.outer(basis[:, k], inverse[k, :])
        error = operator_norm(spectral_projection(a, contour) - reference)
        yield _tolerance(
            "projection", trial, error, ORACLE_TOL * max(1.0, operator_norm(reference)), dim=dim
        )

        lam = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        shift = np.diag(np.ones(2), 1)
        jordan = lam * np.eye(3) + shift
        nilpotent = quasinilpotent(jordan, lam, Contour(lam, 0.5))
        yield _tolerance("jordan-nilpotent", trial, operator_norm(nilpotent - shift), ORACLE_TOL)

        channel_dim = int(rng.integers(2, 5))
        channel = random_stinespring_channel(channel_dim, int(rng.integers(2, 5)), rng)
        try:
            spectrum = classify_power_convergence(channel)
            largest = max(spectrum.nilpotent_norms, default=0.0)
        except NumericalFailureError as err:
            logger.warning("Channel classification failed in trial %d: %s", trial, err)
            largest = np.inf
        yield _tolerance("cptp-nilpotent", trial, largest, 1e-8, dim=channel_dim)

        direction = random_contraction(dim, rng, 0.1)
        curvature = random_contraction(dim, rng, 0.1)

        def b_map(s: float, b0=direction, b1=curvature) -> np.ndarray:
            return b0 + s * b1

        dense = contour.with_nodes(256)
        epsilon = semicontinuity_epsilon(a, dense, sup_perturbation_norm(b_map, 1.0)).epsilon
        t = min(0.5, float(rng.uniform(0.1, 1.0)) * epsilon)
        zeroth, first = check_perturbed_projection_bounds(a, b_map, t, contour)
        yield _from_report("perturbed-projection-zeroth", trial, zeroth, PERTURBATION_TOL)
        yield _from_report("perturbed-projection-first", trial, first, PERTURBATION_TOL)


def counting_suite(seed: int, trials: int) -> Iterator[CheckResult]:
    """Closed form against enumeration for n ≤ 14, and binomial row sums."""
    del seed, trials
    for n in range(1, 15):
        for k in range(n + 1):
            total = 0
            for j in range(max_transitions(n, k) + 2):
                closed, brute = counting_closed_form(j, n, k), counting_brute_force(j, n, k)
                total += brute
                yield _tolerance("counting", n, abs(closed - brute), 0, j=j, k=k)
            yield _tolerance("counting-row-sum", n, abs(total - comb(n, k)), 0, k=k)


SUITE_RUNNERS: Dict[str, Callable[[int, int], Iterator[CheckResult]]] = {
    "chernoff": chernoff_suite,
    "trotter": trotter_suite,
    "lemmas": lemmas_suite,
    "spectral": spectral_suite,
    "counting": counting_suite,
}


def run_suite(suite: str, seed: int = 0, trials: int = 20) -> List[CheckResult]:
    """Run a named suite and collect its results."""
    results = list(SUITE_RUNNERS[suite](seed, trials))
    failed = sum(1 for result in results if not result.passed)
    logger.info("Suite '%s': %d check(s), %d failed", suite, len(results), failed)
    return results


def summarize(results: List[CheckResult]) -> List[str]:
    """One summary line per check name."""
    lines = []
    for check in dict.fromkeys(result.check for result in results):
        selected = [result for result in results if result.check == check]
        passed = sum(result.passed for result in selected)
        worst = min(result.slack for result in selected)
        lines.append(f"{check}: {passed}/{len(selected)} passed, min slack {worst:.3e}")
    return lines
