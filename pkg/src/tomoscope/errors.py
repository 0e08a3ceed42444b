"""Exception types shared across the package.

Plain ``ValueError`` is used for ordinary domain errors (bad arguments,
violated preconditions); the classes here mark conditions the CLI maps to
dedicated exit codes.
"""


class TomoscopeError(Exception):
    """Base class for package-specific failures."""


class CapacityError(TomoscopeError):
    """A requested basis size exceeds the hard truncation cap."""


class PrecisionError(TomoscopeError):
    """An operation cannot meet its accuracy contract with the given inputs."""


class ConfigError(TomoscopeError):
    """A scenario configuration is malformed; the message names the field."""
