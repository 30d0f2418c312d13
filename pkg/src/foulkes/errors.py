"""Exception types shared across the package."""


class GuardExceededError(Exception):
    """A computation was requested beyond the configured degree guard."""


class InternalConsistencyError(Exception):
    """An exact identity that must always hold failed.

    Raised when a computed quantity violates an internal invariant (a
    fractional or negative Schur coefficient, a failed dimension count, a
    hook-length mismatch).  This signals a bug, never bad user input.
    """
