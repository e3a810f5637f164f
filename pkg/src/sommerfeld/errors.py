"""Exception and warning types shared across the package."""


class SommerfeldError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SommerfeldError, ValueError):
    """A constants record or constants file failed validation."""


class DomainError(SommerfeldError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class UnboundOrbitError(DomainError):
    """E >= 0: the electron is not bound, no closed orbit exists."""


class NoRealOrbitError(DomainError):
    """E below the circular-orbit minimum for the given angular momentum."""


class DegenerateCutError(DomainError):
    """Circular orbit: the branch cut collapses to a point, so the
    contour evaluation is undefined.  Use the closed form instead."""


class ConvergenceError(SommerfeldError, RuntimeError):
    """An iterative scheme exhausted its budget.

    When raised by the adaptive quadrature the ``best`` attribute carries
    the best estimate reached before giving up.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NumericalInconsistencyError(SommerfeldError, RuntimeError):
    """Two internally computed quantities disagree beyond tolerance."""


class NuclearChargeWarning(UserWarning):
    """Z at or beyond the inverse fine-structure constant, where the
    nonrelativistic treatment stops being trustworthy."""
