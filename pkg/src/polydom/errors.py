"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition on user-supplied arguments was violated."""


class InternalConsistencyError(RuntimeError):
    """A structural self-check failed; indicates a generator bug."""


class CertificateError(RuntimeError):
    """A constructed certificate failed its own admissibility or weight check."""


class CombinationError(ValueError):
    """An inequality combination does not telescope to a weight bound.

    Carries the residual per-class coefficient vector so the caller can see
    how far the combination is from a clean multiple of the total weight.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SolverDisagreementError(RuntimeError):
    """The two exact solvers returned different optima for the same instance."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
