"""Exception hierarchy.

Malformed input raises; a criterion with no solution is reported by the
solvers as ``None``, never as an exception.
"""


class HopfwitError(Exception):
    """Base class for every error raised on malformed input."""


class NonPrimeModulus(HopfwitError, ValueError):
    pass


class NonMonicMinimalPolynomial(HopfwitError, ValueError):
    pass


class ZeroDegreeExtension(HopfwitError, ValueError):
    pass


class DivisionByZero(HopfwitError, ZeroDivisionError):
    pass


class ParseError(HopfwitError, ValueError):
    pass


class DimensionMismatch(HopfwitError, ValueError):
    pass


class FieldMismatch(HopfwitError, ValueError):
    pass


class EmptySolutionSet(HopfwitError, ValueError):
    pass


class StructureMismatch(HopfwitError, ValueError):
    pass


class InvalidGroupTable(HopfwitError, ValueError):
    pass


class InvalidDatum(HopfwitError, ValueError):
    pass


class TNotSubalgebra(HopfwitError, ValueError):
    pass


class NotAlgebraMap(HopfwitError, ValueError):
    pass


class NotAFrobeniusSystem(HopfwitError, ValueError):
    pass


class WrongMode(HopfwitError, ValueError):
    pass


class WrongTag(HopfwitError, ValueError):
    pass


class InvalidTheta(HopfwitError, ValueError):
    pass


class NotARetraction(HopfwitError, ValueError):
    pass


class InseparableMinimalPolynomial(HopfwitError, ValueError):
    pass


class ContextMismatch(HopfwitError, ValueError):
    """A witness file was checked against structures it was not made for."""


class VerificationFailure(HopfwitError, AssertionError):
    """A freshly solved witness failed its own verifier (an internal bug, never input)."""
