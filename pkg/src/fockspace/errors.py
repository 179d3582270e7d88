"""Exception types shared across the library."""


class SingularityError(ArithmeticError):
    """A closed-form expression was evaluated at (or too close to) a pole."""


class ConvergenceError(RuntimeError):
    """A numerical procedure failed to reach its accuracy target.

    Carries the achieved residual so callers can report it.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class IntegrabilityError(ValueError):
    """The requested integral does not converge for the given parameters."""
