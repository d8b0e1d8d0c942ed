"""Exception types shared by every module.

ValidationError marks a misconfigured input (CLI exit code 2);
NumericalError marks a failure during computation (CLI exit code 3).
"""


class ValidationError(ValueError):
    """Input violates a documented precondition or invariant."""


class NumericalError(RuntimeError):
    """A numerical routine failed or produced an invalid result."""


class EigensolverError(NumericalError):
    """Eigendecomposition failed; carries the offending matrix."""

    def __init__(self, message, matrix=None):
        super().__init__(message)
        self.matrix = matrix
