"""Shared exception types."""


class ChanmoeError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(ChanmoeError, ValueError):
    """Operand shapes are incompatible with the requested operation."""


class ConfigError(ChanmoeError, ValueError):
    """A configuration value violates its documented constraints."""


class UsageError(ChanmoeError, RuntimeError):
    """An API was called in a state where the call has no meaning."""


class DataFormatError(ChanmoeError, ValueError):
    """A serialized artifact is corrupt, truncated, or of an unsupported version."""


class DivergenceError(ChanmoeError, RuntimeError):
    """Training produced a non-finite loss."""
