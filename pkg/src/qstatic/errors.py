"""Exception types shared across the package."""


class ConstraintViolation(ValueError):
    """An input breaks a documented invariant (ordering, range, normalization)."""


class InternalConsistencyError(RuntimeError):
    """A quantity that must be real or conserved drifted beyond tolerance.

    Raised only from internal checks; seeing this means a bug, not bad input.
    """
