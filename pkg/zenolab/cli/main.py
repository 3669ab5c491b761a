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
Module containing the ``zeno`` command-line entry point.

.. code-block:: text

    zeno run <config.json>
    zeno rates <config.json>
    zeno verify <suite> [--trials K] [--seed S]
    zeno spectral <matrix.json> --center a+bi --radius r
    zeno counting --n N

Exit codes: 0 on success, 2 on validation errors, 3 on numerical failures and 4 when a
verified inequality or oracle comparison fails.

"""
import argparse
import json
import logging
import sys
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from zenolab._version import __version__
from zenolab.chernoff import trotter_rate
from zenolab.exceptions import InvalidInputError, NumericalFailureError, ResourceLimitError
from zenolab.linalg import as_complex_matrix
from zenolab.scenarios import ScenarioNotFoundError, get_scenario
from zenolab.spectral import Contour, quasinilpotent, semicontinuity_epsilon, spectral_projection
from zenolab.zeno import (
    ErrorSeries,
    RateFit,
    TooFewPointsError,
    ZenoInstance,
    counting_table,
    make_zeno_instance,
    rate_fit,
    zeno_error_series,
)

from .config import ExperimentConfig, grid_window, load_config, resolve_threads
from .exceptions import ConfigValidationError
from .report import (
    atomic_write,
    atomic_write_all,
    format_float,
    render_csv,
    render_json,
    rate_path,
    rows_from_series,
    sort_rows,
)
from .verify import SUITES, run_suite, summarize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
EXIT_VIOLATION = 4

VERIFY_HEADER = "check,trial,lhs,rhs,slack,passed"


def _with_norm_kind(inst: ZenoInstance, config: ExperimentConfig) -> ZenoInstance:
    if config.norm_kind is None or config.norm_kind == inst.norm_kind:
        return inst
    logger.info("Re-wrapping '%s' with norm kind %s", inst.label, config.norm_kind.value)
    return make_zeno_instance(
        inst.m,
        inst.generator,
        inst.t,
        norm_kind=config.norm_kind,
        spectrum=inst.spectrum,
        label=inst.label,
        flags=inst.flags,
        params=inst.params,
        allow_noncontractive=True,
    )


def build_series(config: ExperimentConfig) -> List[ErrorSeries]:
    """Build the configured scenario and measure one error series per total time.

    Zeno instances are swept over ``config.t`` (their own time when empty); Trotter pairs
    and precomputed series sources yield a single series.

    Raises:
        ScenarioNotFoundError: If the scenario is not registered.
        InvalidInputError: If a parameter is invalid.
    """
    spec = get_scenario(config.scenario, **config.scenario_parameters())
    source = spec.build()

    if isinstance(source, ErrorSeries):
        return [source]
    if isinstance(source, tuple):
        return [trotter_rate(source[0], source[1], config.n_grid)]

    inst = _with_norm_kind(source, config)
    workers = resolve_threads()
    times = config.t or (inst.t,)
    series = []
    for t in times:
        logger.info("Sweeping %s at t = %g (%d step counts)", inst.label, t, len(config.n_grid))
        series.append(
            zeno_error_series(
                inst.with_time(t),
                config.n_grid,
                with_bound=config.bound,
                workers=workers,
                delta_tilde=config.delta_tilde,
            )
        )
    return series


def _fits(series: Sequence[ErrorSeries], window) -> List[Tuple[float, RateFit]]:
    fits = []
    for item in series:
        try:
            fits.append((item.t, rate_fit(item, window)))
        except TooFewPointsError as err:
            logger.warning("No rate fit at t = %g: %s", item.t, err)
    return fits


def _rates_document(fits: Sequence[Tuple[float, RateFit]]) -> str:
    return json.dumps({"rates": [{"t": t, **fit.to_dict()} for t, fit in fits]}, indent=2) + "\n"


def cmd_run(config_path: str) -> int:
    """Run an experiment and write its report."""
    config = load_config(config_path)
    series = build_series(config)
    rows = sort_rows(row for item in series for row in rows_from_series(item))
    fits = _fits(series, grid_window(config))

    if config.output is None:
        sys.stdout.write(render_csv(rows))
        return EXIT_OK

    if config.output.format == "json":
        atomic_write(config.output.path, render_json(rows, fits))
    else:
        files = {config.output.path: render_csv(rows)}
        if fits:
            files[rate_path(config.output.path)] = _rates_document(fits)
        atomic_write_all(files)
    return EXIT_OK


def cmd_rates(config_path: str) -> int:
    """Print the rate fit of every series of an experiment as JSON.

    Raises:
        TooFewPointsError: If a series has fewer than four usable points.
    """
    config = load_config(config_path)
    series = build_series(config)
    window = grid_window(config)
    fits = [(item.t, rate_fit(item, window)) for item in series]
    if len(fits) == 1:
        document: Any = fits[0][1].to_dict()
    else:
        document = [{"t": t, **fit.to_dict()} for t, fit in fits]
    sys.stdout.write(json.dumps(document, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(suite: str, seed: int = 0, trials: int = 20) -> int:
    """Run a verification suite, print one CSV row per check and a summary on stderr."""
    results = run_suite(suite, seed=seed, trials=trials)
    lines = [VERIFY_HEADER]
    for result in results:
        fields = (
            result.check,
            str(result.trial),
            format_float(result.lhs),
            format_float(result.rhs),
            format_float(result.slack),
            "true" if result.passed else "false",
        )
        lines.append(",".join(fields))
    sys.stdout.write("\n".join(lines) + "\n")

    for line in summarize(results):
        print(line, file=sys.stderr)
    failures = [result for result in results if not result.passed]
    for result in failures:
        print(
            f"VIOLATION {result.check} trial={result.trial} seed={seed + result.trial} "
            f"lhs={result.lhs!r} rhs={result.rhs!r} witness={result.witness}",
            file=sys.stderr,
        )
    return EXIT_VIOLATION if failures else EXIT_OK


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` (or ``a+bj``) into a complex number.

    Raises:
        InvalidInputError: If ``text`` is not a complex literal.
    """
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError as err:
        raise InvalidInputError(f"Cannot parse {text!r} as a complex number a+bi.") from err


def load_matrix(path: str) -> np.ndarray:
    """Read a matrix from JSON with ``rows``, ``cols`` and row-major ``re``/``im`` arrays.

    Raises:
        InvalidInputError: If the file is missing, malformed or inconsistent.
    """
    try:
        with open(path, "r", encoding="utf-8") as file:
            document = json.load(file)
    except FileNotFoundError as err:
        raise InvalidInputError(f"Matrix file {path} does not exist.") from err
    except json.JSONDecodeError as err:
        raise InvalidInputError(f"Matrix file {path} is not valid JSON ({err.msg}).") from err

    if not isinstance(document, dict) or not {"rows", "cols", "re"} <= set(document):
        raise InvalidInputError("Matrix file needs the keys 'rows', 'cols' and 're'.")
    rows, cols = document["rows"], document["cols"]
    if not all(isinstance(value, int) and value > 0 for value in (rows, cols)):
        raise InvalidInputError(f"'rows' and 'cols' must be positive integers, got {rows}, {cols}.")
    real = np.asarray(document["re"], dtype=float)
    imag = np.asarray(document.get("im", np.zeros(rows * cols)), dtype=float)
    if real.shape != (rows * cols,) or imag.shape != (rows * cols,):
        raise InvalidInputError(f"'re' and 'im' must hold rows * cols = {rows * cols} values.")
    return as_complex_matrix((real + 1j * imag).reshape(rows, cols), "matrix", square=True)


def matrix_to_dict(matrix: np.ndarray) -> Dict[str, Any]:
    """Inverse of :func:`load_matrix`."""
    rows, cols = matrix.shape
    flat = np.asarray(matrix, dtype=np.complex128).reshape(-1)
    return {"rows": rows, "cols": cols, "re": flat.real.tolist(), "im": flat.imag.tolist()}


def cmd_spectral(matrix_path: str, center: str, radius: float) -> int:
    """Print the Riesz projection, quasinilpotent part and perturbation constants as JSON."""
    matrix = load_matrix(matrix_path)
    contour = Contour(parse_complex(center), radius)
    projection = spectral_projection(matrix, contour)

    rank = np.trace(projection)
    if abs(rank) < 0.5:
        logger.warning("Contour encloses no eigenvalue; using its center")
        eigenvalue = contour.center
    else:
        eigenvalue = complex(np.trace(matrix @ projection) / rank)
    nilpotent = quasinilpotent(matrix, eigenvalue, contour)
    data = semicontinuity_epsilon(matrix, contour, 0.0)

    document = {
        "center": [contour.center.real, contour.center.imag],
        "radius": contour.radius,
        "eigenvalue": [eigenvalue.real, eigenvalue.imag],
        "projection": matrix_to_dict(projection),
        "nilpotent": matrix_to_dict(nilpotent),
        "perturbation": {
            "resolvent_sup": data.resolvent_sup,
            "d": data.d,
            "curve_length": data.curve_length,
            "epsilon": None if np.isinf(data.epsilon) else data.epsilon,
            "b": data.b,
        },
    }
    sys.stdout.write(json.dumps(document, indent=2) + "\n")
    return EXIT_OK


def cmd_counting(n: int) -> int:
    """Print N(j, n, k) from the closed form and by enumeration, then check row sums."""
    table = counting_table(n)
    print("j,k,closed_form,brute_force")
    mismatches = 0
    for j, k, closed, brute in table:
        print(f"{j},{k},{closed},{brute}")
        mismatches += closed != brute

    for k in range(n + 1):
        total = sum(brute for _, row_k, _, brute in table if row_k == k)
        if total != comb(n, k):
            mismatches += 1
            print(f"row k={k}: sum {total} != C({n},{k}) = {comb(n, k)}", file=sys.stderr)
    print(f"counting n={n}: {len(table)} entries, {mismatches} mismatch(es)", file=sys.stderr)
    return EXIT_VIOLATION if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the ``zeno`` command."""
    parser = argparse.ArgumentParser(
        prog="zeno", description="Quantum Zeno product-formula numerical lab."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Measure an error series and write a report.")
    run.add_argument("config", help="Path to the experiment JSON document.")

    rates = commands.add_parser("rates", help="Print the fitted convergence rate as JSON.")
    rates.add_argument("config", help="Path to the experiment JSON document.")

    verify = commands.add_parser("verify", help="Run a seeded verification suite.")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--trials", type=int, default=20, help="Number of random trials.")
    verify.add_argument("--seed", type=int, default=0, help="Seed of the first trial.")

    spectral = commands.add_parser("spectral", help="Riesz projection inside a circle.")
    spectral.add_argument("matrix", help="Path to the matrix JSON file.")
    spectral.add_argument("--center", required=True, help="Circle center a+bi.")
    spectral.add_argument("--radius", type=float, required=True, help="Circle radius.")

    counting = commands.add_parser("counting", help="Tabulate the transition counts N(j,n,k).")
    counting.add_argument("--n", type=int, required=True, help="String length.")
    return parser


def configure_logging(verbosity: int) -> None:
    """Route log records to stderr; warnings are captured as log records."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    logging.captureWarnings(True)


def dispatch(args: argparse.Namespace) -> int:
    """Run the selected subcommand."""
    if args.command == "run":
        return cmd_run(args.config)
    if args.command == "rates":
        return cmd_rates(args.config)
    if args.command == "verify":
        if args.trials < 1:
            raise InvalidInputError(f"--trials must be positive, got {args.trials}.")
        return cmd_verify(args.suite, seed=args.seed, trials=args.trials)
    if args.command == "spectral":
        return cmd_spectral(args.matrix, args.center, args.radius)
    if args.command == "counting":
        return cmd_counting(args.n)
    raise InvalidInputError(f"Unknown command {args.command!r}.")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``zeno`` console script."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return dispatch(args)
    except (ConfigValidationError, InvalidInputError, ScenarioNotFoundError) as err:
        print(f"error: {args.command}: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NumericalFailureError, TooFewPointsError, ResourceLimitError) as err:
        print(f"numerical failure: {args.command}: {err}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
