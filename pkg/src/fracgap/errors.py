"""Exception hierarchy.

Input problems (malformed files, bad parameters) derive from ``InputError``;
mathematical negative results (a check that fails, an infeasible LP) derive
from ``CheckFailure`` and carry the name of the failing stage.
"""

from __future__ import annotations


class FracGapError(Exception):
    stage = "unknown"


class InputError(FracGapError, ValueError):
    stage = "input"


class GraphFormatError(InputError):
    stage = "parse"


class SearchLimitExceeded(InputError):
    """Backtracking search visited more nodes than the configured guard."""

    stage = "search"

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what}: search exceeded {limit} backtracking nodes")
        self.limit = limit


class CheckFailure(FracGapError):
    def __init__(self, message: str, stage: str | None = None, details: dict | None = None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage
        self.details = details or {}


class ConvergenceError(CheckFailure):
    stage = "spectral"


class NonRegularPartError(CheckFailure):
    stage = "classify"


class ForeignEdgeError(CheckFailure):
    stage = "edge_condition"


class NonUniformCycleCountError(CheckFailure):
    stage = "odd_cycle_decomposition"


class BipartiteGraphError(CheckFailure):
    stage = "odd_girth"


class NotDistanceRegularError(CheckFailure):
    stage = "drg"


class CycleCountMismatch(CheckFailure):
    """p^2 q disagrees with enumeration; this is a bug, never a property of the input."""

    stage = "drg"


class InfeasibleFamilyError(CheckFailure):
    stage = "lp"


class LPBreakdown(CheckFailure):
    stage = "lp"
