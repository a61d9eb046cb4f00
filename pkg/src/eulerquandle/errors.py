"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so keep the split between domain
problems (bad input) and resource problems (a guard refused the work).
"""


class QuandleError(Exception):
    """Base class for all library errors."""


class DomainError(QuandleError, ValueError):
    """An argument lies outside the operation's domain."""


class HypothesisViolation(DomainError):
    """Inputs break a standing hypothesis, e.g. gcd(n, p) != 1."""


class StructuralError(QuandleError):
    """A structure is not what the caller claimed (non-bijective translation, bad group)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AxiomError(StructuralError):
    """Raised when a validated construction fails the quandle axioms."""

    def __init__(self, message, report):
        super().__init__(message, witness=report.violations[:1])
        self.report = report


class ResourceError(QuandleError):
    """A size guard was exceeded; nothing was computed."""


class ConsistencyError(QuandleError):
    """An internal cross-check failed. This means a bug, never a math result."""
