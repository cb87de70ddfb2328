"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A parameter is outside its mathematical domain (e.g. alpha <= -1)."""


class SingularPointError(ValueError):
    """Evaluation requested exactly at a singular point (x = 0)."""


class OracleConvergenceError(RuntimeError):
    """The grid oracle could not reach the requested tolerance.

    Carries the best available estimates so callers can still report them.
    """

    def __init__(self, message, values=None, error_estimates=None):
        super().__init__(message)
        self.values = values
        self.error_estimates = error_estimates
