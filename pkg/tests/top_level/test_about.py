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
Unit tests for the about module.

"""
from zenolab import _about, __version__


def test_about(capsys):
    """Test the about function."""
    _about.about()
    output = capsys.readouterr().out

    assert f"zenolab:\t{__version__}" in output
    assert "Core Dependencies" in output
    assert "numpy:" in output
    assert "scipy:" in output
    assert "networkx:" in output
    assert "Python:" in output
    assert "Platform:" in output
