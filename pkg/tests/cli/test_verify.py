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
Unit tests for the seeded verification suites.

"""
import pytest

from zenolab.cli import CheckResult, run_suite, verify
from zenolab.cli.verify import SUITES, summarize
from zenolab.spectral.exceptions import NotPowerConvergentError


def test_suite_names():
    """Test the registered suite names."""
    assert SUITES == ("chernoff", "trotter", "lemmas", "spectral", "counting")


def test_counting_suite_passes():
    """Test that the closed form matches enumeration for every n up to 14."""
    results = run_suite("counting")
    assert results
    assert all(result.passed for result in results)
    assert {result.check for result in results} == {"counting", "counting-row-sum"}
    assert max(result.trial for result in results) == 14


def test_trotter_suite_slope():
    """Test that the Pauli pair slope lands in the first-order window."""
    results = run_suite("trotter", trials=1)
    (slope,) = [result for result in results if result.check == "trotter-slope"]
    assert slope.passed
    assert -1.15 <= slope.witness["slope"] <= -0.85


def test_lemmas_suite_telescoping():
    """Test that the telescoping decomposition holds on a seeded trial."""
    results = run_suite("lemmas", seed=5, trials=1)
    checks = {result.check for result in results}
    assert {"lemma-excursion", "lemma-chernoff", "lemma-exponential", "telescoping"} <= checks
    assert all(result.passed for result in results if result.check == "telescoping")


def test_check_result_slack():
    """Test that slack is rhs minus lhs."""
    result = CheckResult("demo", 0, lhs=0.25, rhs=1.0, passed=True)
    assert result.slack == pytest.approx(0.75)


def test_summarize():
    """Test one summary line per check with the worst slack."""
    results = [
        CheckResult("first", 0, 0.5, 1.0, True),
        CheckResult("first", 1, 2.0, 1.0, False),
        CheckResult("second", 0, 0.0, 1.0, True),
    ]
    lines = summarize(results)
    assert lines == [
        "first: 1/2 passed, min slack -1.000e+00",
        "second: 1/1 passed, min slack 1.000e+00",
    ]


def test_chernoff_suite_passes():
    """Test every Chernoff, product-formula and peripheral estimate over 100 seeded trials."""
    results = run_suite("chernoff", seed=0, trials=100)
    assert {result.trial for result in results} == set(range(100))
    assert {
        "chernoff-sqrt-n",
        "chernoff-modified",
        "product-formula",
        "chernoff-approx-modified",
        "chernoff-approx-tier",
    } <= {result.check for result in results}
    assert all(result.passed for result in results)


def test_spectral_suite_passes():
    """Test contour projections and nilpotent parts against exact oracles on 50 matrices."""
    results = run_suite("spectral", seed=0, trials=50)
    assert {result.trial for result in results} == set(range(50))
    assert all(result.passed for result in results)
    nilpotent = [result for result in results if result.check == "cptp-nilpotent"]
    assert len(nilpotent) == 50
    assert all(result.lhs <= 1e-8 for result in nilpotent)


def test_spectral_suite_records_classification_failure(monkeypatch):
    """Test that a numerical failure in channel classification becomes a failed check."""

    def fail(channel):
        raise NotPowerConvergentError("Spectral gap closed.")

    monkeypatch.setattr(verify, "classify_power_convergence", fail)
    results = run_suite("spectral", seed=0, trials=1)
    (nilpotent,) = [result for result in results if result.check == "cptp-nilpotent"]
    assert not nilpotent.passed
    assert nilpotent.lhs == float("inf")


def test_spectral_suite_propagates_programming_errors(monkeypatch):
    """Test that errors outside the package hierarchy are not swallowed."""

    def broken(channel):
        raise TypeError("unexpected argument")

    monkeypatch.setattr(verify, "classify_power_convergence", broken)
    with pytest.raises(TypeError):
        run_suite("spectral", seed=0, trials=1)


def test_lemmas_suite_passes():
    """Test the per-term estimates and telescoping on 50 seeded instances."""
    results = run_suite("lemmas", seed=0, trials=50)
    assert {result.trial for result in results} == set(range(50))
    assert all(result.passed for result in results)
