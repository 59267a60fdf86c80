"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ArgumentError(ValueError):
    """Arguments are inconsistent with each other (e.g. a conserved sum is violated)."""


class BracketError(RuntimeError):
    """A root bracket could not be established (endpoint signs agree)."""


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget."""


class ResourceError(RuntimeError):
    """A search would exceed its evaluation budget."""
