"""Exception types shared across the package."""


class GraphJacError(Exception):
    """Base class for every error raised by graphjac."""


class InputError(GraphJacError, ValueError):
    """Malformed input: bad file contents, out-of-range ids, invalid parameters."""


class GuardError(GraphJacError):
    """A computation refused to run: disconnected input, size guard, Euler failure."""
