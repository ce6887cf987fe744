"""Exception hierarchy for monideal.

Every error raised by the library derives from ``MonidealError`` and from the
builtin exception it refines, so callers may catch either.
"""

from typing import Optional


class MonidealError(Exception):
    """Base class for all library errors."""


class RingMismatchError(MonidealError, ValueError):
    """Operands live in different polynomial rings."""


class DimensionMismatchError(MonidealError, ValueError):
    """A vector, matrix or index does not fit the ring it is used with."""


class ZeroPolynomialError(MonidealError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class FieldDivisionError(MonidealError, ZeroDivisionError):
    """Division by zero in a coefficient field."""


class ExponentOverflowError(MonidealError, OverflowError):
    """An exponent left the supported range."""


class OrderError(MonidealError, ValueError):
    """Invalid monomial order, or an order unsuitable for the operation."""


class OraclePreconditionError(MonidealError, ValueError):
    """The oracle was asked to certify a candidate it cannot judge."""


class ProblemSyntaxError(MonidealError, ValueError):
    """Malformed problem text, with a 1-based source position.

    ``source`` names the file the text came from, once a reader knows it.
    """

    def __init__(self, message: str, line: int, column: Optional[int] = None, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class NonPrimeModulusError(MonidealError, ValueError):
    """The modulus of a prime field is not a prime in range."""


class InvalidRingError(MonidealError, ValueError):
    """Variable names or order do not describe a valid ring."""


class UsageError(MonidealError, ValueError):
    """A command was invoked with inputs it cannot act on."""
