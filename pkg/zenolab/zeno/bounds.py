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
Module computing the constants of the Zeno condition and evaluating the explicit
O(1/n) error bounds built from them.

Three bound forms are supported:

* ``thm1-explicit``: single peripheral eigenvalue 1 with ‖Mⁿ - P‖ ≤ δⁿ.
* ``uniform-power``: single peripheral eigenvalue 1 with ‖Mⁿ - P‖ ≤ c̃δⁿ, c̃ ≥ 1.
* ``closed-system``: M an orthogonal projection and L anti-Hermitian.

"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Mapping, NamedTuple, Optional

import numpy as np

from zenolab.config import get_tolerances
from zenolab.exceptions import InvalidInputError
from zenolab.linalg import hermitian_defect, matrix_exp, operator_norm
from zenolab.spectral import classify_power_convergence

from .exceptions import HypothesisViolationError
from .instance import ZenoInstance, make_zeno_instance

logger = logging.getLogger(__name__)

E_BTILDE_SAMPLES = 64
POWER_RATE_MAX = 64

Norm = Callable[[np.ndarray], float]


class BoundKind(str, Enum):
    """Explicit bound forms.

    Attributes:
        THM1_EXPLICIT: Bound for ‖Mⁿ - P‖ ≤ δⁿ.
        CLOSED_SYSTEM: Bound for projective measurements of a closed system.
        UNIFORM_POWER: Bound for ‖Mⁿ - P‖ ≤ c̃δⁿ.
    """

    THM1_EXPLICIT = "thm1-explicit"
    CLOSED_SYSTEM = "closed-system"
    UNIFORM_POWER = "uniform-power"


class ZenoConstants(NamedTuple):
    """Leakage constant b, c_p = ‖1 - P‖ and e^{b̃} = sup_s ‖e^{sPLP}P‖."""

    b: float
    c_p: float
    e_btilde: float


@dataclass(frozen=True)
class BoundCertificate:
    """Evaluated explicit bound together with the constants it was built from.

    Args:
        kind: Bound form.
        params: Constants t, norm_l, c_p, e_btilde, delta, delta_tilde, c_tilde, b, n.
        value: Value of the bound.
    """

    kind: BoundKind
    params: Dict[str, Any] = field(default_factory=dict)
    value: float = 0.0

    def __post_init__(self):
        if not self.value >= 0:
            raise InvalidInputError(f"Bound value must be nonnegative, got {self.value}.")
        for key, param in self.params.items():
            if isinstance(param, float) and not math.isfinite(param):
                raise InvalidInputError(f"Bound parameter '{key}' is not finite.")


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def _require(params: Mapping[str, Any], *keys: str) -> None:
    missing = [key for key in keys if key not in params]
    if missing:
        raise InvalidInputError(f"Bound parameters missing: {', '.join(missing)}.")
    n = params.get("n")
    if n is not None and n < 1:
        raise InvalidInputError(f"Bound requires n >= 1, got {n}.")


def _quadratic_coefficient(c_p: float, e_btilde: float) -> float:
    return (c_p + (1 + e_btilde) * (1 + c_p**2)) / 2


def evaluate_bound_thm1(params: Mapping[str, Any]) -> float:
    """Explicit bound for a contraction with ‖Mⁿ - P‖ ≤ δⁿ.

    c_p·t·‖L‖/n + ((c_p + (1 + e^{b̃})(1 + c_p²))/2)·t²‖L‖²/n + δⁿ
    + (2δ/(1 - δ))·e^{3t‖L‖c_p}/n

    Raises:
        InvalidInputError: If a parameter is missing or δ is outside [0, 1).
    """
    _require(params, "t", "norm_l", "c_p", "e_btilde", "delta", "n")
    t, norm_l, c_p = params["t"], params["norm_l"], params["c_p"]
    delta, n = params["delta"], params["n"]
    if not 0 <= delta < 1:
        raise InvalidInputError(f"Bound requires delta in [0, 1), got {delta}.")

    value = c_p * t * norm_l / n
    value += _quadratic_coefficient(c_p, params["e_btilde"]) * (t * norm_l) ** 2 / n
    value += delta**n
    if delta > 0:
        value += (2 * delta / (1 - delta)) * _exp(3 * t * norm_l * c_p) / n
    return value


def evaluate_bound_uniform(params: Mapping[str, Any]) -> float:
    """Explicit bound for a contraction with ‖Mⁿ - P‖ ≤ c̃δⁿ.

    t·c_p·‖L‖/n + ((c_p + (1 + e^{b̃})(1 + c_p²))/2)·t²‖L‖²/n + (2c̃/(δ̃ - δ))·δ̃ⁿ
    + (2δ̃/(1 - δ̃))·e^{6t·c_p·c̃·‖L‖/(δ̃ - δ)}/n

    Raises:
        InvalidInputError: If a parameter is missing or δ < δ̃ < 1 fails.
    """
    _require(params, "t", "norm_l", "c_p", "e_btilde", "delta", "delta_tilde", "c_tilde", "n")
    t, norm_l, c_p = params["t"], params["norm_l"], params["c_p"]
    delta, delta_tilde, c_tilde = params["delta"], params["delta_tilde"], params["c_tilde"]
    n = params["n"]
    if not 0 <= delta < delta_tilde < 1:
        raise InvalidInputError(
            f"Bound requires 0 <= delta < delta_tilde < 1, got delta = {delta}, "
            f"delta_tilde = {delta_tilde}."
        )

    gap = delta_tilde - delta
    value = t * c_p * norm_l / n
    value += _quadratic_coefficient(c_p, params["e_btilde"]) * (t * norm_l) ** 2 / n
    value += (2 * c_tilde / gap) * delta_tilde**n
    value += (2 * delta_tilde / (1 - delta_tilde)) * _exp(6 * t * c_p * c_tilde * norm_l / gap) / n
    return value


def evaluate_bound_closed_system(params: Mapping[str, Any]) -> float:
    """Closed-system bound (1/n)(t‖H‖ + (5/2)t²‖H‖²)."""
    _require(params, "t", "norm_l", "n")
    t, norm_l, n = params["t"], params["norm_l"], params["n"]
    return (t * norm_l + 2.5 * (t * norm_l) ** 2) / n


EVALUATORS = {
    BoundKind.THM1_EXPLICIT: evaluate_bound_thm1,
    BoundKind.UNIFORM_POWER: evaluate_bound_uniform,
    BoundKind.CLOSED_SYSTEM: evaluate_bound_closed_system,
}


def leakage_constant(inst: ZenoInstance, norm: Optional[Norm] = None) -> float:
    """Constant b with ‖Pe^{sL}P⊥‖ ≤ sb and ‖P⊥e^{sL}P‖ ≤ sb.

    For a single peripheral projection P, b is the larger of
    min(‖P‖‖LP⊥‖, ‖PL‖‖P⊥‖) and min(‖P⊥‖‖LP‖, ‖P⊥L‖‖P‖). With several peripheral
    eigenvalues, b = max(‖ML‖, ‖LP_Σ‖).
    """
    norm = norm or inst.norm
    superop = inst.generator.superoperator
    p = inst.spectrum.p_sigma
    if inst.spectrum.num_peripheral > 1:
        return max(norm(inst.m @ superop), norm(superop @ p))

    q = np.eye(inst.size) - p
    norm_p, norm_q = norm(p), norm(q)
    upper = min(norm_p * norm(superop @ q), norm(p @ superop) * norm_q)
    lower = min(norm_q * norm(superop @ p), norm(q @ superop) * norm_p)
    return max(upper, lower)


def sup_compressed_evolution(
    inst: ZenoInstance, t: Optional[float] = None, norm: Optional[Norm] = None
) -> float:
    """Sampled e^{b̃} = sup_{s ∈ [0, t]} ‖e^{sPLP}P‖ on 64 equispaced points."""
    norm = norm or inst.norm
    t = inst.t if t is None else t
    p = inst.spectrum.p_sigma
    compressed = p @ inst.generator.superoperator @ p
    return max(norm(matrix_exp(s * compressed) @ p) for s in np.linspace(0.0, t, E_BTILDE_SAMPLES))


def zeno_condition_constants(inst: ZenoInstance) -> ZenoConstants:
    """Constants (b, c_p, e^{b̃}) of the Zeno condition in the instance norm.

    Args:
        inst: Zeno instance; P is the peripheral projection P_Σ.

    Returns:
        ZenoConstants: leakage constant, ‖1 - P‖ and sup_{s ∈ [0, t]} ‖e^{sPLP}P‖.
    """
    p = inst.spectrum.p_sigma
    constants = ZenoConstants(
        b=leakage_constant(inst),
        c_p=inst.norm(np.eye(inst.size) - p),
        e_btilde=sup_compressed_evolution(inst),
    )
    logger.debug("Zeno constants of '%s': %s", inst.label, constants)
    return constants


def check_single_unit_eigenvalue(inst: ZenoInstance) -> None:
    """Raise HypothesisViolationError unless M has the single peripheral eigenvalue 1."""
    spectrum = inst.spectrum
    if spectrum.num_peripheral != 1:
        raise HypothesisViolationError(
            "single peripheral eigenvalue",
            f"Instance '{inst.label}' has {spectrum.num_peripheral} peripheral eigenvalues.",
        )
    lam = spectrum.eigenvalues[0]
    if abs(lam - 1) > get_tolerances().peripheral_tol:
        raise HypothesisViolationError(
            "peripheral eigenvalue equals 1", f"Found peripheral eigenvalue {lam}."
        )


def power_rate(
    inst: ZenoInstance, n_max: int = POWER_RATE_MAX, norm: Optional[Norm] = None
) -> float:
    """Smallest δ with ‖Mⁿ - Σλⱼⁿ Pⱼ‖ ≤ δⁿ for n ≤ ``n_max``, at least the spectral δ.

    Raises:
        HypothesisViolationError: If the measured rate is not below one.
    """
    norm = norm or inst.norm
    floor = get_tolerances().error_floor
    rate = inst.spectrum.delta
    power = np.eye(inst.size, dtype=np.complex128)
    for n in range(1, n_max + 1):
        power = power @ inst.m
        residual = norm(power - inst.spectrum.reconstruct(n))
        if residual > floor:
            rate = max(rate, residual ** (1.0 / n))
    if rate >= 1:
        raise HypothesisViolationError(
            "power convergence with constant 1",
            f"‖Mⁿ - P‖ decays no faster than {rate:.6g}ⁿ; boost the instance first.",
        )
    return float(rate)


def power_constant(
    inst: ZenoInstance, delta: float, n_max: int = POWER_RATE_MAX, norm: Optional[Norm] = None
) -> float:
    """Smallest c̃ with ‖Mⁿ - Σλⱼⁿ Pⱼ‖ ≤ c̃δⁿ for n ≤ ``n_max``, in the instance norm."""
    norm = norm or inst.norm
    floor = get_tolerances().error_floor
    c_tilde = 0.0
    power = np.eye(inst.size, dtype=np.complex128)
    for n in range(1, n_max + 1):
        power = power @ inst.m
        residual = norm(power - inst.spectrum.reconstruct(n))
        if residual > floor:
            if delta**n == 0:
                raise HypothesisViolationError(
                    "uniform power convergence",
                    f"Residual {residual:.3e} at n = {n} with delta = {delta:.3e}.",
                )
            c_tilde = max(c_tilde, residual / delta**n)
    return c_tilde


def _check_closed_system(inst: ZenoInstance) -> None:
    m, superop = inst.m, inst.generator.superoperator
    tol = 1e-8
    if hermitian_defect(m) > tol or operator_norm(m @ m - m) > tol:
        raise HypothesisViolationError("M is an orthogonal projection")
    if operator_norm(superop + superop.conj().T) > tol:
        raise HypothesisViolationError("L is anti-Hermitian")


def bound_parameters(
    inst: ZenoInstance, kind: BoundKind, delta_tilde: Optional[float] = None
) -> Dict[str, Any]:
    """Constants of a bound form, without the step count.

    Args:
        inst: Zeno instance.
        kind: Bound form.
        delta_tilde: δ̃ of the uniform bound; defaults to (1 + δ)/2.

    Raises:
        HypothesisViolationError: If the instance violates the hypotheses of the bound.
    """
    kind = BoundKind(kind)
    norm_l = inst.norm(inst.generator.superoperator)
    if kind == BoundKind.CLOSED_SYSTEM:
        _check_closed_system(inst)
        return {"t": inst.t, "norm_l": norm_l}

    check_single_unit_eigenvalue(inst)
    constants = zeno_condition_constants(inst)
    params = {"t": inst.t, "norm_l": norm_l, "b": constants.b}
    params.update(c_p=constants.c_p, e_btilde=constants.e_btilde)

    if kind == BoundKind.THM1_EXPLICIT:
        params["delta"] = power_rate(inst)
        return params

    delta = inst.spectrum.delta
    delta_tilde = (1 + delta) / 2 if delta_tilde is None else float(delta_tilde)
    c_tilde = max(power_constant(inst, delta), 1.0)
    params.update(delta=delta, delta_tilde=delta_tilde, c_tilde=c_tilde)
    return params


def certify_bound(
    inst: ZenoInstance, n: int, kind: BoundKind, delta_tilde: Optional[float] = None
) -> BoundCertificate:
    """Evaluate a bound form for ``n`` steps.

    Returns:
        BoundCertificate: constants and value of the bound.
    """
    kind = BoundKind(kind)
    params = bound_parameters(inst, kind, delta_tilde)
    params["n"] = int(n)
    return BoundCertificate(kind=kind, params=params, value=EVALUATORS[kind](params))


def boost_power_convergence(inst: ZenoInstance) -> ZenoInstance:
    """Replace M by M^{n₀} so that the power-convergence constant drops below one.

    n₀ is the smallest power with c̃δ^{n₀} < 1. Instances with c̃ ≤ 1 are returned
    unchanged.

    Raises:
        HypothesisViolationError: If M has a peripheral eigenvalue other than 1.
    """
    check_single_unit_eigenvalue(inst)
    spectrum = inst.spectrum
    if spectrum.c_tilde <= 1:
        return inst
    if spectrum.delta <= 0:
        n0 = 1
    else:
        n0 = int(math.floor(math.log(spectrum.c_tilde) / -math.log(spectrum.delta))) + 1
    while spectrum.c_tilde * spectrum.delta**n0 >= 1:
        n0 += 1

    boosted = np.linalg.matrix_power(inst.m, n0)
    logger.info("Boosted '%s' to M^%d (c_tilde = %.6g)", inst.label, n0, spectrum.c_tilde)
    return make_zeno_instance(
        boosted,
        inst.generator,
        inst.t,
        norm_kind=inst.norm_kind,
        spectrum=classify_power_convergence(boosted),
        label=f"{inst.label}^{n0}",
        flags=inst.flags,
        params={**inst.params, "boost": n0},
        allow_noncontractive="non-contractive" in inst.flags,
    )
