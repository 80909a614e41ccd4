"""Exception hierarchy for gpdmf."""


class FuzzyError(ValueError):
    """Base class for all errors raised by this package."""


class NonPositiveRadius(FuzzyError):
    pass


class NonFinite(FuzzyError):
    pass


class NotAUnit(FuzzyError):
    pass


class OutOfBranch(FuzzyError):
    pass


class BadOrdinate(FuzzyError):
    pass


class BadShape(FuzzyError):
    pass


class NotInV(FuzzyError):
    pass


class ZeroElement(FuzzyError):
    pass


class DimensionMismatch(FuzzyError):
    pass


class SingularMatrix(FuzzyError):
    pass


class NotRref(FuzzyError):
    pass


class BadIndex(FuzzyError):
    pass


class ParseError(FuzzyError):
    """Malformed input file, literal or command line."""
