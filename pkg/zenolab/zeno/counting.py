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
Module counting binary strings by their number of letter changes.

N(j, n, k) is the number of strings of length n over {A, B} with exactly k letters A
and exactly j adjacent positions where the letter changes (AB or BA).

"""
from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, List, Tuple

from zenolab.exceptions import InvalidInputError, ResourceLimitError

BRUTE_FORCE_MAX_N = 24


def _check_arguments(j: int, n: int, k: int) -> None:
    for name, value in (("j", j), ("n", n), ("k", k)):
        if isinstance(value, bool) or int(value) != value:
            raise InvalidInputError(f"Argument {name} must be an integer, got {value!r}.")
    if n < 1:
        raise InvalidInputError(f"String length n must be at least 1, got {n}.")
    if not 0 <= k <= n:
        raise InvalidInputError(f"Letter count k must lie in [0, {n}], got {k}.")
    if j < 0:
        raise InvalidInputError(f"Transition count j must be nonnegative, got {j}.")


def max_transitions(n: int, k: int) -> int:
    """Largest number of letter changes, 2·min(k, n - k) - [2k = n]."""
    if k in (0, n):
        return 0
    return 2 * min(k, n - k) - (1 if 2 * k == n else 0)


def counting_closed_form(j: int, n: int, k: int) -> int:
    """Closed form of N(j, n, k).

    With j = 2l - 1 the count is 2·C(n-k-1, l-1)·C(k-1, l-1); with j = 2l it is
    C(n-k-1, l-1)·C(k-1, l) + C(n-k-1, l)·C(k-1, l-1), which equals
    ((n - 2l)/l)·C(n-k-1, l-1)·C(k-1, l-1).

    Raises:
        InvalidInputError: If the arguments are out of range.
    """
    _check_arguments(j, n, k)
    if j == 0:
        return 1 if k in (0, n) else 0
    if j > max_transitions(n, k):
        return 0

    a_runs, b_runs = k - 1, n - k - 1
    if j % 2 == 1:
        l = (j + 1) // 2
        return 2 * comb(b_runs, l - 1) * comb(a_runs, l - 1)
    l = j // 2
    return comb(b_runs, l - 1) * comb(a_runs, l) + comb(b_runs, l) * comb(a_runs, l - 1)


@lru_cache(maxsize=None)
def _transition_histogram(n: int, k: int) -> Dict[int, int]:
    histogram: Counter = Counter()
    for positions in combinations(range(n), k):
        chosen = set(positions)
        letters = [index in chosen for index in range(n)]
        changes = sum(1 for left, right in zip(letters, letters[1:]) if left != right)
        histogram[changes] += 1
    return dict(histogram)


def counting_brute_force(j: int, n: int, k: int) -> int:
    """N(j, n, k) by enumerating every string with k letters A.

    Raises:
        InvalidInputError: If the arguments are out of range.
        ResourceLimitError: If ``n`` exceeds 24.
    """
    _check_arguments(j, n, k)
    if n > BRUTE_FORCE_MAX_N:
        raise ResourceLimitError("string length", n, BRUTE_FORCE_MAX_N)
    return _transition_histogram(n, k).get(j, 0)


def counting_table(n: int) -> List[Tuple[int, int, int, int]]:
    """Rows (j, k, closed form, brute force) for every admissible (j, k) at length ``n``."""
    rows = []
    for k in range(n + 1):
        for j in range(max_transitions(n, k) + 1):
            rows.append((j, k, counting_closed_form(j, n, k), counting_brute_force(j, n, k)))
    return rows
