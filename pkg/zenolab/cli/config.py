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
Module validating experiment configurations.

An experiment is a single JSON document:

.. code-block:: json

    {
        "scenario": {"name": "optimality", "parameters": {"delta": 0.5}},
        "t": [0.5, 1.0],
        "n_grid": {"start": 16, "stop": 1024, "factor": 2},
        "norm_kind": "spectral-superop",
        "bound": "thm1",
        "seed": 0,
        "output": {"path": "optimality.csv", "format": "csv"}
    }

Only ``scenario`` is required. Validation happens before any computation and rejects
unknown keys.

"""
import json
import math
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from zenolab.scenarios import SCENARIOS, scenario_defaults
from zenolab.zeno import NormKind
from zenolab.zeno.series import BOUND_CHOICES

from .exceptions import ConfigValidationError

DEFAULT_N_GRID = (16, 32, 64, 128, 256, 512, 1024)
MAX_GRID_POINTS = 4096
OUTPUT_FORMATS = ("csv", "json")
TOP_LEVEL_KEYS = {
    "scenario",
    "t",
    "n_grid",
    "norm_kind",
    "bound",
    "delta_tilde",
    "seed",
    "window",
    "output",
}


@dataclass(frozen=True)
class OutputSpec:
    """Report destination and format."""

    path: str
    format: str = "csv"


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment configuration.

    Args:
        scenario: Registered scenario name.
        parameters: Scenario parameters given in the configuration.
        t: Total times; empty to use the scenario's own time.
        n_grid: Strictly increasing step counts.
        norm_kind: Norm override, if any.
        bound: Bound column of the series.
        delta_tilde: δ̃ of the uniform bound.
        seed: Seed forwarded to scenarios that accept one.
        window: Rate-fit window.
        output: Report destination.
    """

    scenario: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    t: Tuple[float, ...] = ()
    n_grid: Tuple[int, ...] = DEFAULT_N_GRID
    norm_kind: Optional[NormKind] = None
    bound: str = "none"
    delta_tilde: Optional[float] = None
    seed: Optional[int] = None
    window: Optional[Tuple[int, int]] = None
    output: Optional[OutputSpec] = None

    def scenario_parameters(self) -> Dict[str, Any]:
        """Scenario parameters with the seed and norm kind forwarded where accepted."""
        accepted = scenario_defaults(self.scenario)
        parameters = dict(self.parameters)
        if self.seed is not None and "seed" in accepted:
            parameters.setdefault("seed", self.seed)
        if self.norm_kind is not None and "norm_kind" in accepted:
            parameters.setdefault("norm_kind", self.norm_kind.value)
        if "n_grid" in accepted:
            parameters.setdefault("n_grid", list(self.n_grid))
        return parameters


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


def _is_integer(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_times(value: Any) -> Tuple[float, ...]:
    values = value if isinstance(value, list) else [value]
    if not values:
        raise ConfigValidationError("t", "expected a number or a non-empty list of numbers")
    for item in values:
        if not _is_number(item) or item < 0:
            raise ConfigValidationError("t", f"times must be finite and nonnegative, got {item!r}")
    return tuple(float(item) for item in values)


def parse_n_grid(value: Any) -> Tuple[int, ...]:
    """Expand an explicit list or a ``{start, stop, factor}`` geometric range."""
    if isinstance(value, list):
        grid = value
    elif isinstance(value, dict):
        unknown = set(value) - {"start", "stop", "factor"}
        if unknown:
            raise ConfigValidationError("n_grid", f"unknown key(s) {sorted(unknown)}")
        start, stop, factor = value.get("start"), value.get("stop"), value.get("factor", 2)
        if not (_is_integer(start) and _is_integer(stop)) or start < 1 or stop < start:
            raise ConfigValidationError(
                "n_grid", "start and stop must be integers 1 <= start <= stop"
            )
        if not _is_number(factor) or factor <= 1:
            raise ConfigValidationError("n_grid", "factor must be a number greater than 1")
        grid, current = [], float(start)
        while round(current) <= stop:
            if not grid or round(current) > grid[-1]:
                grid.append(int(round(current)))
            current *= factor
    else:
        raise ConfigValidationError("n_grid", "expected a list or a {start, stop, factor} object")

    if not grid or len(grid) > MAX_GRID_POINTS:
        raise ConfigValidationError("n_grid", f"expected 1 to {MAX_GRID_POINTS} step counts")
    if not all(_is_integer(n) and n >= 1 for n in grid):
        raise ConfigValidationError("n_grid", "step counts must be positive integers")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigValidationError("n_grid", "step counts must be strictly increasing")
    return tuple(grid)


def _parse_scenario(value: Any) -> Tuple[str, Dict[str, Any]]:
    if not isinstance(value, dict):
        raise ConfigValidationError("scenario", "expected an object with 'name' and 'parameters'")
    unknown = set(value) - {"name", "parameters"}
    if unknown:
        raise ConfigValidationError("scenario", f"unknown key(s) {sorted(unknown)}")
    name = value.get("name")
    if name not in SCENARIOS:
        raise ConfigValidationError(
            "scenario.name", f"expected one of {sorted(SCENARIOS)}, got {name!r}"
        )
    parameters = value.get("parameters", {})
    if not isinstance(parameters, dict):
        raise ConfigValidationError("scenario.parameters", "expected an object")
    accepted = scenario_defaults(name)
    unknown = set(parameters) - set(accepted)
    if unknown:
        raise ConfigValidationError(
            "scenario.parameters", f"unknown parameter(s) {sorted(unknown)} for '{name}'"
        )
    for key, item in parameters.items():
        if _is_number(item) and key in ("t", "delta", "p") and item < 0:
            raise ConfigValidationError(f"scenario.parameters.{key}", "must be nonnegative")
    return name, dict(parameters)


def _parse_output(value: Any) -> OutputSpec:
    if not isinstance(value, dict) or "path" not in value:
        raise ConfigValidationError("output", "expected an object with 'path' and 'format'")
    unknown = set(value) - {"path", "format"}
    if unknown:
        raise ConfigValidationError("output", f"unknown key(s) {sorted(unknown)}")
    path, fmt = value["path"], value.get("format", "csv")
    if not isinstance(path, str) or not path:
        raise ConfigValidationError("output.path", "expected a non-empty string")
    if fmt not in OUTPUT_FORMATS:
        raise ConfigValidationError("output.format", f"expected one of {OUTPUT_FORMATS}")
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        raise ConfigValidationError("output.path", f"directory {directory} does not exist")
    return OutputSpec(path=path, format=fmt)


def validate_config(document: Any) -> ExperimentConfig:
    """Validate a parsed configuration document.

    Raises:
        ConfigValidationError: On unknown keys, wrong types or out-of-range values.
    """
    if not isinstance(document, dict):
        raise ConfigValidationError("<root>", "expected a JSON object")
    unknown = set(document) - TOP_LEVEL_KEYS
    if unknown:
        raise ConfigValidationError("<root>", f"unknown key(s) {sorted(unknown)}")
    if "scenario" not in document:
        raise ConfigValidationError("scenario", "missing required key")

    name, parameters = _parse_scenario(document["scenario"])
    times = _parse_times(document["t"]) if "t" in document else ()
    n_grid = parse_n_grid(document["n_grid"]) if "n_grid" in document else DEFAULT_N_GRID

    norm_kind = None
    if "norm_kind" in document:
        try:
            norm_kind = NormKind(document["norm_kind"])
        except ValueError as err:
            raise ConfigValidationError(
                "norm_kind", f"expected one of {[kind.value for kind in NormKind]}"
            ) from err

    bound = document.get("bound", "none")
    if bound not in BOUND_CHOICES:
        raise ConfigValidationError("bound", f"expected one of {sorted(BOUND_CHOICES)}")

    delta_tilde = document.get("delta_tilde")
    if delta_tilde is not None and (not _is_number(delta_tilde) or not 0 < delta_tilde < 1):
        raise ConfigValidationError("delta_tilde", "expected a number in (0, 1)")

    seed = document.get("seed")
    if seed is not None and (not _is_integer(seed) or seed < 0):
        raise ConfigValidationError("seed", "expected a nonnegative integer")

    window = document.get("window")
    if window is not None:
        if (
            not isinstance(window, list)
            or len(window) != 2
            or not all(_is_integer(n) and n >= 1 for n in window)
            or window[0] > window[1]
        ):
            raise ConfigValidationError("window", "expected [n_min, n_max] with n_min <= n_max")
        window = (window[0], window[1])

    output = _parse_output(document["output"]) if "output" in document else None
    return ExperimentConfig(
        scenario=name,
        parameters=parameters,
        t=times,
        n_grid=n_grid,
        norm_kind=norm_kind,
        bound=bound,
        delta_tilde=delta_tilde,
        seed=seed,
        window=window,
        output=output,
    )


def load_config(path: str) -> ExperimentConfig:
    """Read and validate a configuration file.

    Raises:
        ConfigValidationError: If the file is missing, not JSON, or fails validation.
    """
    try:
        with open(path, "r", encoding="utf-8") as file:
            document = json.load(file)
    except FileNotFoundError as err:
        raise ConfigValidationError("<file>", f"{path} does not exist") from err
    except json.JSONDecodeError as err:
        raise ConfigValidationError("<file>", f"{path} is not valid JSON ({err.msg})") from err
    return validate_config(document)


def resolve_threads() -> int:
    """Worker count from ``ZENO_THREADS``, defaulting to the number of cores.

    Raises:
        ConfigValidationError: If the variable is not a positive integer.
    """
    raw = os.getenv("ZENO_THREADS")
    if raw is None or raw == "":
        return os.cpu_count() or 1
    try:
        threads = int(raw)
    except ValueError as err:
        raise ConfigValidationError(
            "ZENO_THREADS", f"expected a positive integer, got {raw!r}"
        ) from err
    if threads < 1:
        raise ConfigValidationError("ZENO_THREADS", f"expected a positive integer, got {threads}")
    return threads


def grid_window(config: ExperimentConfig) -> Tuple[int, int]:
    """Rate-fit window of a configuration, the whole grid by default."""
    if config.window is not None:
        return config.window
    return (min(config.n_grid), max(config.n_grid))
