"""Shared exception types."""


class ContextMismatchError(ValueError):
    """Raised when elements from different algebra contexts are combined."""


class NotInvertibleError(ZeroDivisionError):
    """Raised when inverting zero or a non-unit."""


class SizeGuardError(RuntimeError):
    """Raised when a computation would exceed a configured size guard."""
