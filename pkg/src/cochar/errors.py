class CocharError(Exception):
    """Base class for library errors."""


class NonSymmetricInput(CocharError, ValueError):
    """Schur expansion was asked for a polynomial that is not symmetric."""


class NonCharacter(CocharError, ValueError):
    """A class function did not decompose with nonnegative integer multiplicities."""


class DegreeTooLarge(CocharError):
    """A computation would exceed the configured work limits."""


class InsufficientTruncation(CocharError):
    """The truncation degree is too small to certify the requested bound."""


class EmptyList(CocharError, ValueError):
    """An operation that needs at least one series got none."""
