from __future__ import annotations

# stage tags carried by a rejection
NON_CHORDAL = "non-chordal"
TRIANGLE = "full-antipodal-triangle"
UPPER_COLORING = "upper-coloring"
CROSS_UPPER = "cross-upper-conflict"
EXTEND = "coloring-conflict"
CROSS_PAIR = "cross-pair-conflict"


class Rejected(Exception):
    """The input is not in the class being recognized."""

    def __init__(self, stage: str, reason: str):
        super().__init__(f"{stage}: {reason}")
        self.stage = stage
        self.reason = reason


class InvariantViolation(AssertionError):
    """An internal invariant failed; this is a bug, never a verdict."""
