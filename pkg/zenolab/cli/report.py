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
Module turning error series into report rows and writing them atomically.

Floats are written in their shortest round-trip form, so identical runs give
byte-identical reports.

"""
import csv
import io
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from zenolab.zeno import ErrorSeries, RateFit, TooFewPointsError, rate_fit

logger = logging.getLogger(__name__)

CSV_HEADER = ("n", "t", "error", "bound", "slack", "flags")


@dataclass(frozen=True)
class ReportRow:
    """One line of an experiment report."""

    n: int
    t: float
    error: float
    bound: Optional[float] = None
    slack: Optional[float] = None
    slope_to_date: Optional[float] = None
    flags: Tuple[str, ...] = ()

    def csv_fields(self) -> List[str]:
        """Fields in :data:`CSV_HEADER` order."""
        return [
            str(self.n),
            format_float(self.t),
            format_float(self.error),
            format_float(self.bound),
            format_float(self.slack),
            ";".join(self.flags),
        ]

    def to_dict(self) -> Dict[str, Any]:
        """JSON-friendly dictionary of the row."""
        return {
            "n": self.n,
            "t": self.t,
            "error": self.error,
            "bound": self.bound,
            "slack": self.slack,
            "slope_to_date": self.slope_to_date,
            "flags": list(self.flags),
        }


def format_float(value: Optional[float]) -> str:
    """Shortest round-trip representation, empty for None."""
    return "" if value is None else repr(float(value))


def _slope_to_date(series: ErrorSeries, n: int) -> Optional[float]:
    try:
        return rate_fit(series, (series.n_values[0], n)).slope
    except TooFewPointsError:
        return None


def rows_from_series(series: ErrorSeries) -> List[ReportRow]:
    """Report rows of a series, with the running rate fit up to each row."""
    return [
        ReportRow(
            n=entry.n,
            t=series.t,
            error=entry.error,
            bound=entry.bound,
            slack=entry.slack,
            slope_to_date=_slope_to_date(series, entry.n),
            flags=entry.flags,
        )
        for entry in series.entries
    ]


def sort_rows(rows: Iterable[ReportRow]) -> List[ReportRow]:
    """Rows ordered by n, then t."""
    return sorted(rows, key=lambda row: (row.n, row.t))


def render_csv(rows: Sequence[ReportRow]) -> str:
    """CSV text with the header ``n,t,error,bound,slack,flags``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buffer.getvalue()


def render_json(rows: Sequence[ReportRow], fits: Sequence[Tuple[float, RateFit]]) -> str:
    """JSON document holding the rows and the rate fits."""
    document = {
        "rows": [row.to_dict() for row in rows],
        "rates": [{"t": t, **fit.to_dict()} for t, fit in fits],
    }
    return json.dumps(document, indent=2) + "\n"


def atomic_write_all(files: Dict[str, str]) -> None:
    """Write every ``path: text`` pair to temporary files first, then rename them into place.

    No target is touched unless all texts were written out.
    """
    staged: List[Tuple[str, str]] = []
    try:
        for path, text in files.items():
            directory = os.path.dirname(os.path.abspath(path))
            handle, temp_path = tempfile.mkstemp(dir=directory, prefix=".zeno-", suffix=".tmp")
            staged.append((temp_path, path))
            with os.fdopen(handle, "w", encoding="utf-8", newline="") as file:
                file.write(text)
        for temp_path, path in staged:
            os.replace(temp_path, path)
    except BaseException:
        for temp_path, _ in staged:
            if os.path.exists(temp_path):
                os.remove(temp_path)
        raise
    for _, path in staged:
        logger.info("Wrote %s", path)


def atomic_write(path: str, text: str) -> None:
    """Write ``text`` to a temporary file next to ``path`` and rename it into place."""
    atomic_write_all({path: text})


def rate_path(path: str) -> str:
    """Path ``<stem>.rate.json`` next to a report path."""
    stem, _ = os.path.splitext(path)
    return f"{stem}.rate.json"
