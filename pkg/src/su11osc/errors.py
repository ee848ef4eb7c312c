"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class SingularPointError(DomainError):
    """Evaluation requested at a singular point (e.g. the phase-space origin)."""


class TruncationError(RuntimeError):
    """A truncated basis cannot represent the requested object to tolerance."""


class ConvergenceError(RuntimeError):
    """A series or quadrature did not converge within its budget."""
