"""
Error hierarchy for the warping library.

Every error is a Django ``ValidationError`` whose ``code`` names the error
kind (``OddLength``, ``UnknownCrossing``, ...). The CLI and the JSON views
print ``code`` and ``message`` as they are.
"""
from django.core.exceptions import ValidationError


class WarpingError(ValidationError):
    default_code = 'WarpingError'

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)

    def __str__(self):
        return f"{self.code}: {self.message}"


class InvalidDiagram(WarpingError):
    """Raised by validate(); code is OddLength, IdNotPairedOnceOverOnceUnder or SignMismatch."""
    default_code = 'InvalidDiagram'


class UnknownCrossing(WarpingError):
    default_code = 'UnknownCrossing'


class ZeroCrossings(WarpingError):
    default_code = 'ZeroCrossings'


class EdgeOutOfRange(WarpingError):
    default_code = 'EdgeOutOfRange'


class InconsistentClosure(WarpingError):
    default_code = 'InconsistentClosure'


# Wielomiany
class ZeroPolynomial(WarpingError):
    default_code = 'ZeroPolynomial'


class DegreeExceedsC(WarpingError):
    default_code = 'DegreeExceedsC'


class NegativeCoefficient(WarpingError):
    default_code = 'NegativeCoefficient'


class NegativeDegree(WarpingError):
    default_code = 'NegativeDegree'


class NotationSyntaxError(WarpingError):
    """Unparseable token or term; ``position`` is 1-based."""
    default_code = 'SyntaxError'

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class InvalidBraid(WarpingError):
    default_code = 'InvalidBraid'


class NotAKnot(WarpingError):
    default_code = 'NotAKnot'


# Transformacje
class EmptySummand(WarpingError):
    default_code = 'EmptySummand'


class NoSuchLabel(WarpingError):
    default_code = 'NoSuchLabel'


# Charakteryzacja
class NonPositiveL(WarpingError):
    default_code = 'NonPositiveL'


class InvalidCharForm(WarpingError):
    default_code = 'InvalidCharForm'


class VerificationFailed(WarpingError):
    default_code = 'VerificationFailed'


# Przeszukiwanie
class BoundExceeded(WarpingError):
    default_code = 'BoundExceeded'


class TooLarge(WarpingError):
    default_code = 'TooLarge'


class NoAlternatingTarget(WarpingError):
    default_code = 'NoAlternatingTarget'


class NotConstructible(WarpingError):
    default_code = 'NotConstructible'
