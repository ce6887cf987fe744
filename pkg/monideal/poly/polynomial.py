"""Sparse multivariate polynomials with exact coefficients.

A polynomial is an immutable tuple of ``Term(coeff, monomial)`` pairs kept
strictly descending under the ring's monomial order, with no zero
coefficients. The canonical form doubles as equality, and the leading term
is always ``terms[0]``.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, NamedTuple, Tuple, Union

from monideal.errors import RingMismatchError, ZeroPolynomialError
from monideal.poly.field import Scalar
from monideal.poly.monomial import (
    ExponentVector,
    check_degree_sum,
    check_exponents,
    monomial_mul,
)
from monideal.poly.ring import RingContext


class Term(NamedTuple):
    coeff: Scalar
    monomial: ExponentVector


Operand = Union["Polynomial", int, Fraction]


class Polynomial:
    """An element of ``ring``; build through the classmethods or arithmetic."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: Iterable[Tuple[Scalar, ExponentVector]] = ()):
        field = ring.field
        acc: Dict[ExponentVector, Scalar] = {}
        for coeff, monomial in terms:
            monomial = check_exponents(monomial, ring.nvars)
            coeff = field.convert(coeff)
            if monomial in acc:
                acc[monomial] = field.add(acc[monomial], coeff)
            else:
                acc[monomial] = coeff
        self.ring = ring
        self.terms = _sorted_terms(ring, acc)
        self._hash = None

    @classmethod
    def _canonical(cls, ring: RingContext, terms: Tuple[Term, ...]) -> "Polynomial":
        """Wrap terms already in canonical form without re-checking them."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.terms = terms
        poly._hash = None
        return poly

    @classmethod
    def from_dict(cls, ring: RingContext, acc: Dict[ExponentVector, Scalar]) -> "Polynomial":
        """Build from a monomial -> field element map (entries already in the field)."""
        return cls._canonical(ring, _sorted_terms(ring, acc))

    @classmethod
    def zero(cls, ring: RingContext) -> "Polynomial":
        return cls._canonical(ring, ())

    @classmethod
    def constant(cls, ring: RingContext, value: Scalar) -> "Polynomial":
        return cls(ring, [(value, (0,) * ring.nvars)])

    @classmethod
    def one(cls, ring: RingContext) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def monomial(cls, ring: RingContext, exponents: ExponentVector, coeff: Scalar = 1) -> "Polynomial":
        return cls(ring, [(coeff, exponents)])

    @classmethod
    def variable(cls, ring: RingContext, which: Union[int, str]) -> "Polynomial":
        index = ring.index(which) if isinstance(which, str) else which
        exponents = [0] * ring.nvars
        exponents[index] = 1
        return cls.monomial(ring, tuple(exponents))

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0].monomial))

    def leading_term(self) -> Term:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def LM(self) -> ExponentVector:
        return self.leading_term().monomial

    @property
    def LC(self) -> Scalar:
        return self.leading_term().coeff

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(t.monomial) for t in self.terms), default=-1)

    def monomials(self) -> Tuple[ExponentVector, ...]:
        return tuple(t.monomial for t in self.terms)

    def coefficient(self, monomial: ExponentVector) -> Scalar:
        for term in self.terms:
            if term.monomial == monomial:
                return term.coeff
        return self.ring.field.zero

    def involves(self, indices: Iterable[int]) -> bool:
        """True iff some term has a positive exponent at one of ``indices``."""
        indices = tuple(indices)
        return any(t.monomial[i] for t in self.terms for i in indices)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: Operand) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine polynomials over {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        field = self.ring.field
        acc = {t.monomial: t.coeff for t in self.terms}
        for coeff, monomial in other.terms:
            if monomial in acc:
                total = field.add(acc[monomial], coeff)
                if field.is_zero(total):
                    del acc[monomial]
                else:
                    acc[monomial] = total
            else:
                acc[monomial] = coeff
        return Polynomial.from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial._canonical(self.ring, tuple(Term(neg(c), m) for c, m in self.terms))

    def __sub__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Operand) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(self.ring.field.convert(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ring)
        if len(other.terms) == 1:
            return self.mul_term(*other.terms[0])
        if len(self.terms) == 1:
            return other.mul_term(*self.terms[0])
        check_degree_sum(self.total_degree(), other.total_degree())
        field = self.ring.field
        acc: Dict[ExponentVector, Scalar] = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                monomial = tuple(a + b for a, b in zip(m1, m2))
                coeff = field.mul(c1, c2)
                if monomial in acc:
                    acc[monomial] = field.add(acc[monomial], coeff)
                else:
                    acc[monomial] = coeff
        return Polynomial.from_dict(self.ring, {m: c for m, c in acc.items() if not field.is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, coeff: Scalar) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(coeff):
            return Polynomial.zero(self.ring)
        return Polynomial._canonical(self.ring, tuple(Term(field.mul(coeff, c), m) for c, m in self.terms))

    def mul_term(self, coeff: Scalar, monomial: ExponentVector) -> "Polynomial":
        """Multiply by ``coeff * x^monomial``; the order is multiplicative so no re-sort."""
        field = self.ring.field
        if field.is_zero(coeff) or not self.terms:
            return Polynomial.zero(self.ring)
        check_degree_sum(self.total_degree(), sum(monomial))
        return Polynomial._canonical(
            self.ring,
            tuple(Term(field.mul(coeff, c), monomial_mul(m, monomial)) for c, m in self.terms),
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        field = self.ring.field
        if field.is_one(self.terms[0].coeff):
            return self
        return self.scale(field.inv(self.terms[0].coeff))

    def map_monomials(self, ring: RingContext, fn: Callable[[ExponentVector], ExponentVector]) -> "Polynomial":
        """Move into ``ring`` (same field) by rewriting every exponent vector with ``fn``."""
        if ring.field != self.ring.field:
            raise RingMismatchError(f"cannot move a polynomial from {self.ring.field} to {ring.field}")
        field = ring.field
        acc: Dict[ExponentVector, Scalar] = {}
        for coeff, monomial in self.terms:
            target = fn(monomial)
            acc[target] = field.add(acc[target], coeff) if target in acc else coeff
        return Polynomial.from_dict(ring, {m: c for m, c in acc.items() if not field.is_zero(c)})

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def _sorted_terms(ring: RingContext, acc: Dict[ExponentVector, Scalar]) -> Tuple[Term, ...]:
    field = ring.field
    key = ring.order.key
    items = [(m, c) for m, c in acc.items() if not field.is_zero(c)]
    items.sort(key=lambda item: key(item[0]), reverse=True)
    return tuple(Term(c, m) for m, c in items)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def leading_term(f: Polynomial) -> Term:
    return f.leading_term()


def format_monomial(names: Tuple[str, ...], monomial: ExponentVector) -> str:
    """``x^2*y`` style; the empty product prints as ``1``."""
    factors = []
    for name, e in zip(names, monomial):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) or "1"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms descending, explicit ``*`` and ``^``, rationals as ``a/b``."""
    if not f.terms:
        return "0"
    field = f.ring.field
    names = f.ring.variable_names
    pieces = []
    for coeff, monomial in f.terms:
        text = field.format(coeff)
        if any(monomial):
            power = format_monomial(names, monomial)
            if text == "1":
                text = power
            elif text == "-1":
                text = "-" + power
            else:
                text = f"{text}*{power}"
        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append(f"- {text[1:]}")
        else:
            pieces.append(f"+ {text}")
    return " ".join(pieces)
