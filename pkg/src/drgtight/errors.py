"""Exception hierarchy.

Validation problems derive from :class:`ValueError`, arithmetic ones from
:class:`ArithmeticError`, so callers that only know the builtins still catch
them sensibly.
"""


class DrgError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(DrgError, ValueError):
    """An intersection array (or input document) violates a constraint."""


class LengthError(DrgError, ValueError):
    """A sequence has the wrong length for the array it is used with."""


class MismatchedDiameter(LengthError):
    pass


class WrongCase(DrgError, ValueError):
    """Operation is only meaningful for a different structural case."""


class TrivialSequence(DrgError, ValueError):
    """The all-ones sequence was passed where a nontrivial one is required."""


class TrivialTheta(TrivialSequence):
    pass


class NotFeasible(DrgError, ValueError):
    """Some sigma_{i-1} equals sigma_{i+1}."""


InfeasibleSequence = NotFeasible


class ComputationError(DrgError, ArithmeticError):
    """Base for failures of a numeric computation (CLI exit code 2)."""


class ZeroDenominator(ComputationError, ZeroDivisionError):
    """A formula hit a zero denominator.

    ``where`` names the violated hypothesis or the failing index.
    """

    def __init__(self, where, message=None):
        self.where = where
        super().__init__(message or f"zero denominator: {where}")


class NonRealizable(ComputationError):
    """A tridiagonal matrix has a nonpositive off-diagonal product."""


class DegenerateSpectrum(ComputationError):
    """Two computed eigenvalues coincide within tolerance."""
