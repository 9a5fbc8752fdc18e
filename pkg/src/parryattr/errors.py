"""Exception hierarchy shared by the library and the CLI."""


class ParryError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(ParryError, ValueError):
    pass


class CapExceeded(ParryError):
    """A word would exceed the configured maximum length."""


class PreconditionError(ParryError, ValueError):
    pass


class ConsistencyError(ParryError, RuntimeError):
    """An internal cross-check failed; this indicates a bug, not bad input."""
