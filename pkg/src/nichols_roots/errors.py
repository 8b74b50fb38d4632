class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class PreconditionError(DomainError):
    """Raised when a scalar precondition (e.g. a nonvanishing normalizer) fails."""


class ExactDivisionError(ArithmeticError):
    """A division that is supposed to be exact left a remainder."""
