"""Exception hierarchy shared across the package."""


class NetValueError(Exception):
    """Base class for all package errors."""


class InputError(NetValueError, ValueError):
    """An argument is outside the domain of the operation (e.g. a bad node id)."""


class ConfigError(NetValueError, ValueError):
    """A generator or experiment configuration violates its invariants."""


class DegenerateInputError(NetValueError, ValueError):
    """Fitting input cannot determine the requested model."""
