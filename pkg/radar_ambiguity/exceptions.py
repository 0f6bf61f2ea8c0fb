"""Exceptions raised by the radar ambiguity toolkit."""

from __future__ import annotations


class AmbiguityError(Exception):
    """Base error for the radar ambiguity toolkit."""


class EmptySignal(AmbiguityError):
    """Error to indicate an operation received the zero signal."""


class SupportMismatch(AmbiguityError):
    """Error to indicate a signal is not supported where required."""


class HypothesisViolated(AmbiguityError):
    """Error to indicate a set does not satisfy a required sum-uniqueness property."""


class SetTooLarge(AmbiguityError):
    """Error to indicate a support set exceeds the enumeration cap."""


class GenericityRequired(AmbiguityError):
    """Error to indicate a polynomial has repeated or symmetric roots."""


class DegreeCapExceeded(AmbiguityError):
    """Error to indicate a polynomial degree is above the factorization cap."""


class NonUnimodular(AmbiguityError):
    """Error to indicate a value expected on the unit circle is not."""


class InvalidPulseWidth(AmbiguityError):
    """Error to indicate a pulse width outside (0, 1/2]."""


class EmptyRange(AmbiguityError):
    """Error to indicate a grid range has no points."""


class InvalidInput(AmbiguityError):
    """Error to indicate a malformed input document or argument."""

    def __init__(
        self, message: str, line: int | None = None, column: int | None = None
    ) -> None:
        """Initialize with an optional source position."""
        super().__init__(message)
        self.line = line
        self.column = column
