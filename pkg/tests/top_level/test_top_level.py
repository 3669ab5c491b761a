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
Unit tests for top-level exports, tolerances and inequality reports.

"""
import pathlib

import pytest

import zenolab
from zenolab import InequalityReport, InvalidInputError, Tolerances, get_tolerances
from zenolab.config import load_tolerances


@pytest.mark.parametrize(
    "name",
    [
        "about",
        "InequalityReport",
        "Tolerances",
        "get_tolerances",
        "ZenoLabError",
        "InvalidInputError",
        "NumericalFailureError",
        "ResourceLimitError",
    ],
)
def test_top_level_exports(name):
    """Test that the package root exposes its public names."""
    assert hasattr(zenolab, name)


def test_version_string():
    """Test that the version is a non-empty string."""
    assert isinstance(zenolab.__version__, str) and zenolab.__version__


def test_default_tolerances():
    """Test that a missing configuration file gives the built-in tolerances."""
    assert get_tolerances() == Tolerances()


def test_tolerance_overrides(tmp_path, monkeypatch):
    """Test that an INI file overrides selected tolerances."""
    path = tmp_path / "zenolabrc"
    path.write_text(
        "[tolerances]\nperipheral_tol = 1e-7\nquadrature_max_nodes = 8192\n", encoding="utf-8"
    )
    monkeypatch.setenv("ZENOLAB_CONFIG", str(path))
    get_tolerances.cache_clear()

    tolerances = get_tolerances()
    assert tolerances.peripheral_tol == 1e-7
    assert tolerances.quadrature_max_nodes == 8192
    assert isinstance(tolerances.quadrature_max_nodes, int)
    assert tolerances.slack_tol == Tolerances().slack_tol


def test_tolerances_without_section(tmp_path):
    """Test that a file without a tolerances section is ignored."""
    path = tmp_path / "zenolabrc"
    path.write_text("[other]\nkey = 1\n", encoding="utf-8")
    assert load_tolerances(str(path)) == Tolerances()


@pytest.mark.parametrize(
    "body,message",
    [
        ("[tolerances]\nmystery = 1\n", "Unknown tolerance 'mystery'"),
        ("[tolerances]\nslack_tol = tiny\n", "non-numeric value 'tiny'"),
    ],
)
def test_invalid_tolerance_file(tmp_path, body, message):
    """Test that unknown or unparsable tolerances are rejected."""
    path = tmp_path / "zenolabrc"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(InvalidInputError, match=message):
        load_tolerances(str(path))


@pytest.mark.parametrize("lhs,rhs,holds", [(0.5, 1.0, True), (1.0, 1.0, True), (1.1, 1.0, False)])
def test_inequality_report(lhs, rhs, holds):
    """Test slack and the default tolerance of an inequality report."""
    report = InequalityReport(lhs=lhs, rhs=rhs, witness={"n": 4})
    assert report.slack == pytest.approx(rhs - lhs)
    assert report.holds() is holds
    assert report.to_dict()["witness"] == {"n": 4}


def test_inequality_report_tolerance():
    """Test that an explicit tolerance admits small negative slack."""
    report = InequalityReport(lhs=1.0 + 1e-6, rhs=1.0)
    assert not report.holds()
    assert report.holds(1e-5)


@pytest.mark.parametrize(
    "path",
    sorted(pathlib.Path(zenolab.__file__).parent.rglob("*.py")),
    ids=lambda path: path.name,
)
def test_source_header(path):
    """Test that every package module starts with the project license header."""
    first_line = path.read_text(encoding="utf-8").splitlines()[0]
    assert first_line == "# Copyright (C) 2024 zenolab Development Team"
