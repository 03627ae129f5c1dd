"""
@description: Exception hierarchy shared by every package of the toolkit.
             The CLI maps these onto its exit codes (input/precondition -> 1, enumeration cap -> 2).
"""


class CMClosureError(Exception):
    """Base class for all toolkit errors."""


class InputError(CMClosureError, ValueError):
    """Malformed graph/clutter input: bad header, loop, undeclared or out-of-range vertex."""


class PreconditionError(CMClosureError):
    """An operation was called outside of its domain (e.g. cm_augment on a non-closed graph)."""


class EnumerationCapError(CMClosureError):
    """Subset enumeration refused because the vertex count exceeds the configured cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"refusing to enumerate 2^{n} vertex subsets (cap is {cap}); raise the cap explicitly")
        self.n = n
        self.cap = cap


class InvariantViolation(CMClosureError):
    """An internal cross-check between two independent computations failed."""
