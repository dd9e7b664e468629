"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class UnihyperError(Exception):
    """Base class for every error raised by this package."""


class InvalidDegree(UnihyperError, ValueError):
    """A polynomial exceeds the degree allowed for its role."""


class SingularMap(UnihyperError, ValueError):
    """A Möbius map with vanishing determinant."""


class NotApplicable(UnihyperError, ValueError):
    """Preconditions of an identity or representation are not met."""


class NoExponent(UnihyperError, ValueError):
    """The exponent equation of the inversion symmetry has no finite root."""


class PoleInParameters(UnihyperError, ZeroDivisionError):
    """A denominator of the series vanishes for the given parameters."""


class AsymptoticOnly(UnihyperError, ValueError):
    """The formal series is divergent; use the ₂F₀ evaluator instead."""


class NoConvergence(UnihyperError, ArithmeticError):
    """A series or quadrature failed to converge.

    Attributes
    ----------
    best : complex or None
        The best available estimate at the time of failure.
    """

    def __init__(self, message: str, best: complex | None = None):
        super().__init__(message)
        self.best = best


class DomainError(UnihyperError, ValueError):
    """Argument outside the region where the requested evaluator is valid."""


class BranchCut(DomainError):
    """Argument lies on the branch cut of the function."""


class PoleError(UnihyperError, ZeroDivisionError):
    """Evaluation at a singular point."""


class BoundaryTermNonzero(UnihyperError, ArithmeticError):
    """The boundary term of an integral representation does not vanish."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class NoOrthogonalityInterval(UnihyperError, ValueError):
    """The polynomial family has no real orthogonality measure."""
