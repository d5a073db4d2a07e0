"""Exception types shared across the package.

The CLI maps these onto process exit codes (validation -> 2,
numerical failure -> 3, I/O -> 4).
"""


class StopflowError(Exception):
    """Base class for all package errors."""


class ParameterError(StopflowError, ValueError):
    """Model parameters or run configuration violate an admissibility condition.

    ``failures`` lists every violated condition, one human-readable
    string each, so callers see all problems at once.
    """

    def __init__(self, failures):
        if isinstance(failures, str):
            failures = [failures]
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class NumericalError(StopflowError, RuntimeError):
    """A quadrature, bracketing or root-finding step failed.

    Raised instead of returning garbage: every such failure indicates
    broken monotone structure upstream and should stop the run.
    """
