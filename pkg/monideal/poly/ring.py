"""Polynomial ring contexts: variable names, coefficient field, monomial order."""

import re
from dataclasses import dataclass, field as dataclass_field
from typing import Iterable, Tuple

from monideal.errors import DimensionMismatchError, InvalidRingError
from monideal.poly.field import QQ, Field
from monideal.poly.orders import GrevLex, MonomialOrder

VARIABLE_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    """The ring k[x_1, ..., x_n] together with its monomial order.

    Two polynomials interoperate only when their contexts compare equal.
    """

    variable_names: Tuple[str, ...]
    field: Field = QQ
    order: MonomialOrder = dataclass_field(default_factory=GrevLex)

    def __post_init__(self) -> None:
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        for name in names:
            if not isinstance(name, str) or not VARIABLE_NAME.match(name):
                raise InvalidRingError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise InvalidRingError(f"variable names {names} are not distinct")
        self.order.check_length(len(names))

    @property
    def nvars(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise DimensionMismatchError(f"{name!r} is not a variable of {self}") from None

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return RingContext(self.variable_names, self.field, order)

    def with_variables(self, names: Iterable[str], order: MonomialOrder) -> "RingContext":
        return RingContext(tuple(names), self.field, order)

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variable_names)}] ({self.order})"


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """Return ``base``, suffixed with underscores until it avoids ``taken``."""
    taken = set(taken)
    name = base
    while name in taken:
        name += "_"
    return name
