"""Exception hierarchy shared across the package."""


class DiagwalksError(Exception):
    """Base class for all package errors."""


class NotPrime(DiagwalksError):
    pass


class ReducibleModulus(DiagwalksError):
    pass


class FieldTooLarge(DiagwalksError):
    pass


class MixedFields(DiagwalksError):
    pass


class KDoesNotDivide(DiagwalksError):
    pass


class BadDecomposition(DiagwalksError):
    pass


class DependentBasis(DiagwalksError):
    pass


class VertexOutOfRange(DiagwalksError):
    pass


class ArityMismatch(DiagwalksError):
    pass


class ProductTooLarge(DiagwalksError):
    pass


class LengthTableTooShort(DiagwalksError):
    pass


class BadParameters(DiagwalksError):
    pass


class EnumerationTooLarge(DiagwalksError):
    pass


class KNotInteger(DiagwalksError):
    """Raised when (p^{ab}-1)/(b(p^a-1)) is not an integer.

    Carries the divisibility report so callers can show why.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
