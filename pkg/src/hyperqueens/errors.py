"""Exception types raised by the library."""


class InvalidArgumentError(ValueError):
    """A dimension, size, position, index or query parameter is out of range."""


class ResourceCapError(RuntimeError):
    """The board has more cells than the configured cap allows."""
