"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list or colouring text."""


class PreconditionError(ValueError):
    """An input violates an operation's documented precondition."""


class InfeasibleError(RuntimeError):
    """An exact search was refused because the instance is too large."""
