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
Unit tests for counting binary strings by their letter changes.

"""
from math import comb

import pytest

from zenolab.exceptions import InvalidInputError, ResourceLimitError
from zenolab.zeno import (
    counting_brute_force,
    counting_closed_form,
    counting_table,
    max_transitions,
)


@pytest.mark.parametrize("n", range(1, 15))
def test_closed_form_matches_enumeration(n):
    """Test the closed form against brute force for every (j, k)."""
    for k in range(n + 1):
        for j in range(max_transitions(n, k) + 2):
            assert counting_closed_form(j, n, k) == counting_brute_force(j, n, k), (j, n, k)


@pytest.mark.parametrize("n", range(1, 15))
def test_counts_sum_to_binomial(n):
    """Test Σⱼ N(j, n, k) = C(n, k)."""
    for k in range(n + 1):
        total = sum(counting_closed_form(j, n, k) for j in range(max_transitions(n, k) + 1))
        assert total == comb(n, k)


@pytest.mark.parametrize(
    "j, expected", [(0, 0), (1, 2), (2, 2), (3, 2), (4, 0)]
)
def test_strings_of_length_four(j, expected):
    """Test the counts of AABB, ABAB, ABBA, BAAB, BABA and BBAA."""
    assert counting_closed_form(j, 4, 2) == expected


@pytest.mark.parametrize(
    "n, k, expected", [(1, 0, 0), (5, 5, 0), (4, 2, 3), (5, 2, 4), (6, 1, 2)]
)
def test_max_transitions(n, k, expected):
    """Test the largest number of letter changes."""
    assert max_transitions(n, k) == expected


def test_constant_strings():
    """Test that only constant strings have no letter change."""
    assert counting_closed_form(0, 7, 0) == 1
    assert counting_closed_form(0, 7, 7) == 1
    assert counting_closed_form(0, 7, 3) == 0


@pytest.mark.parametrize(
    "j, n, k, message",
    [
        (0, 0, 0, "String length n must be at least 1"),
        (0, 4, 5, "Letter count k must lie"),
        (-1, 4, 2, "Transition count j must be nonnegative"),
        (1.5, 4, 2, "Argument j must be an integer"),
    ],
)
def test_invalid_arguments(j, n, k, message):
    """Test that out-of-range arguments are rejected."""
    with pytest.raises(InvalidInputError, match=message):
        counting_closed_form(j, n, k)


def test_brute_force_length_cap():
    """Test that enumeration refuses strings longer than 24."""
    with pytest.raises(ResourceLimitError, match="string length of 25"):
        counting_brute_force(1, 25, 3)


def test_counting_table():
    """Test that every table row agrees with enumeration."""
    rows = counting_table(5)
    assert (0, 0, 1, 1) in rows
    assert all(closed == brute for _, _, closed, brute in rows)
    assert sum(closed for _, _, closed, _ in rows) == 2**5
