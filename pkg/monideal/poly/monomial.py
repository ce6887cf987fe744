"""Exponent vectors and the monoid operations on them.

An exponent vector is a plain tuple of nonnegative ints, one entry per ring
variable. Tuples are immutable and hashable, which is all the polynomial
code needs; the total degree is ``sum(b)``.
"""

from typing import Iterator, Tuple

from monideal.config import settings
from monideal.errors import DimensionMismatchError, ExponentOverflowError

ExponentVector = Tuple[int, ...]


def check_exponents(b: ExponentVector, length: int) -> ExponentVector:
    """Validate an exponent vector for a ring with ``length`` variables."""
    b = tuple(b)
    if len(b) != length:
        raise DimensionMismatchError(f"exponent vector {b} has length {len(b)}, expected {length}")
    for e in b:
        if not isinstance(e, int) or e < 0:
            raise DimensionMismatchError(f"exponent vector {b} has a negative or non-integer entry")
        if e > settings.EXPONENT_BOUND:
            raise ExponentOverflowError(f"exponent {e} exceeds {settings.EXPONENT_BOUND}")
    return b


def total_degree(b: ExponentVector) -> int:
    return sum(b)


def monomial_mul(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    """Return a/b; the caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(b: ExponentVector, a: ExponentVector) -> bool:
    """True iff x^b divides x^a."""
    return all(x <= y for x, y in zip(b, a))


def monomial_lcm(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_coprime(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def check_degree_sum(*degrees: int) -> None:
    """Raise if a product of monomials of these degrees could overflow.

    Every entry of a product is bounded by the sum of the factors' total
    degrees, so one check per product covers all its terms.
    """
    if sum(degrees) > settings.EXPONENT_BOUND:
        raise ExponentOverflowError(f"product degree {sum(degrees)} exceeds {settings.EXPONENT_BOUND}")


def monomials_of_degree(n: int, degree: int) -> Iterator[ExponentVector]:
    """All exponent vectors of length n and the given total degree, lex-descending."""
    if n == 0:
        if degree == 0:
            yield ()
        return
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(n - 1, degree - first):
            yield (first,) + rest


def monomials_up_to_degree(n: int, degree: int) -> Iterator[ExponentVector]:
    for d in range(degree + 1):
        yield from monomials_of_degree(n, d)
