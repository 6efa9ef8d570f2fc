"""Exceptions raised by the root extraction package."""


class RootExtractionError(Exception):
    """Base class for all errors raised by digroot."""


class MalformedNumberError(RootExtractionError, ValueError):
    """Decimal text that is empty or contains anything other than the digits 0-9."""


class UnsupportedRootKindError(RootExtractionError, ValueError):
    """An exponent other than 2 (square root) or 3 (cube root)."""


class InvariantViolationError(RootExtractionError, AssertionError):
    """An internal contract of the engine was broken. Always a bug, never bad user input."""


class ArithmeticUnderflowError(InvariantViolationError):
    """A subtraction whose subtrahend exceeds its minuend."""
