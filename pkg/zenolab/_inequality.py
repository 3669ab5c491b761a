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
Module defining the InequalityReport carrier returned by every inequality check.

"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .config import get_tolerances


@dataclass(frozen=True)
class InequalityReport:
    """Evaluated sides of an inequality ``lhs <= rhs``.

    Args:
        lhs: Measured left-hand side.
        rhs: Evaluated right-hand side.
        witness: Description of the inputs that produced the report.
    """

    lhs: float
    rhs: float
    witness: Dict[str, Any] = field(default_factory=dict)

    @property
    def slack(self) -> float:
        """Returns ``rhs - lhs``."""
        return self.rhs - self.lhs

    def holds(self, tol: Optional[float] = None) -> bool:
        """Returns True if the slack is at least ``-tol``."""
        tol = get_tolerances().slack_tol if tol is None else tol
        return self.slack >= -tol

    def to_dict(self) -> Dict[str, Any]:
        """Returns a JSON-friendly dictionary of the report."""
        return {"lhs": self.lhs, "rhs": self.rhs, "slack": self.slack, "witness": self.witness}
