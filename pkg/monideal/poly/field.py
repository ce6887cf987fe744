"""Exact coefficient fields.

Scalars are plain Python values: ``fractions.Fraction`` over QQ (always in
lowest terms with a positive denominator) and ``int`` in ``[0, p)`` over
``Fp``. A field object owns the arithmetic so that polynomial code never
branches on the coefficient type.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import isprime

from monideal.config import settings
from monideal.errors import FieldDivisionError, NonPrimeModulusError

Scalar = Union[int, Fraction]


class Field(ABC):
    """Arithmetic over an exact field."""

    name: str

    @property
    @abstractmethod
    def zero(self) -> Scalar: ...

    @property
    @abstractmethod
    def one(self) -> Scalar: ...

    @property
    @abstractmethod
    def characteristic(self) -> int: ...

    @abstractmethod
    def convert(self, value: Scalar) -> Scalar:
        """Map an integer or rational literal into the field."""

    @abstractmethod
    def add(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def sub(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def mul(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def neg(self, a: Scalar) -> Scalar: ...

    @abstractmethod
    def inv(self, a: Scalar) -> Scalar: ...

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def is_one(self, a: Scalar) -> bool:
        return a == 1

    def format(self, a: Scalar) -> str:
        return str(a)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RationalField(Field):
    """The rational numbers with arbitrary-precision arithmetic."""

    name = "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def convert(self, value: Scalar) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise FieldDivisionError("division by zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise FieldDivisionError("division by zero in QQ")
        return Fraction(a) / b


@dataclass(frozen=True)
class PrimeField(Field):
    """Integers modulo a prime ``p < settings.MAX_PRIME``."""

    p: int

    def __post_init__(self) -> None:
        if not 2 <= self.p < settings.MAX_PRIME or not isprime(self.p):
            raise NonPrimeModulusError(f"{self.p} is not a prime below {settings.MAX_PRIME}")

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"Fp {self.p}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, value: Scalar) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldDivisionError(f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldDivisionError(f"division by zero in Fp {self.p}")
        return pow(a, -1, self.p)


QQ = RationalField()


def field_from_name(text: str) -> Field:
    """Build a field from its declaration text, ``QQ`` or ``Fp <prime>``."""
    parts = text.split()
    if parts == ["QQ"]:
        return QQ
    if len(parts) == 2 and parts[0] == "Fp" and parts[1].isdigit():
        return PrimeField(int(parts[1]))
    raise ValueError(f"unknown field {text!r}; expected 'QQ' or 'Fp <prime>'")
