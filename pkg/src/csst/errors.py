"""Exception hierarchy shared by every module."""


class CsstError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(CsstError, ValueError):
    """Shapes or lengths do not fit together (ragged rows, length mismatch, ...)."""


class DomainError(CsstError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class CapacityError(CsstError, RuntimeError):
    """The request would need an enumeration larger than the configured cap."""


class InconsistencyError(CsstError, AssertionError):
    """Two routes that must agree did not; this always indicates a bug."""
