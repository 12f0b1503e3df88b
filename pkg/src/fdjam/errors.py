"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside its documented domain."""


class QuadratureError(RuntimeError):
    """An adaptive integration failed to converge within its budget."""


class BracketError(ValueError):
    """Bisection endpoints do not bracket a sign change."""


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget."""


class NumericalError(RuntimeError):
    """A linear solve failed on nominally well-conditioned input."""


class ConfigError(ValueError):
    """A run configuration is missing or malformed."""
