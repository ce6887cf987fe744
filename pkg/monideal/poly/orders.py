"""Monomial orders on exponent vectors.

Each order is a frozen value exposing ``key(b)``: a flat tuple of ints such
that ``key(a) > key(b)`` exactly when ``a`` is the larger monomial. All keys
of one order on vectors of one length have the same length, so a block key
is the concatenation of its parts and negating every entry reverses the
order. Sorting, ``max``, heaps and comparisons all go through the key.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from monideal.errors import DimensionMismatchError, OrderError
from monideal.poly.monomial import ExponentVector


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


class MonomialOrder(ABC):
    """A multiplicative well-order on exponent vectors."""

    @abstractmethod
    def key(self, b: ExponentVector) -> tuple: ...

    @property
    def is_degree_compatible(self) -> bool:
        return False

    def check_length(self, n: int) -> None:
        """Raise unless the order can compare vectors of length n."""

    def __call__(self, b: ExponentVector) -> tuple:
        return self.key(b)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, b):
        return tuple(b)

    def __str__(self) -> str:
        return "lex"


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    """Total degree first; ties go to the vector with the smaller last differing entry."""

    def key(self, b):
        return (sum(b),) + tuple(-e for e in reversed(b))

    @property
    def is_degree_compatible(self) -> bool:
        return True

    def __str__(self) -> str:
        return "grevlex"


@dataclass(frozen=True)
class WeightedThenGrevLex(MonomialOrder):
    """Weighted degree first, grevlex to break ties. Weights must be nonnegative."""

    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise OrderError(f"weights {self.weights} must be nonnegative for a well-order")

    def key(self, b):
        return (sum(w * e for w, e in zip(self.weights, b)), sum(b)) + tuple(-e for e in reversed(b))

    def check_length(self, n: int) -> None:
        if n != len(self.weights):
            raise DimensionMismatchError(f"weight vector has length {len(self.weights)}, ring has {n} variables")

    @property
    def is_degree_compatible(self) -> bool:
        return len(set(self.weights)) <= 1

    def __str__(self) -> str:
        return f"weighted({','.join(map(str, self.weights))})+grevlex"


@dataclass(frozen=True)
class Block(MonomialOrder):
    """Compare the first ``split`` coordinates under ``first``, break ties under ``second``.

    Any monomial involving one of the first ``split`` variables is larger than
    every monomial in the remaining variables alone, so this is an
    elimination order for the first block.
    """

    split: int
    first: MonomialOrder
    second: MonomialOrder

    def __post_init__(self) -> None:
        if self.split < 0:
            raise OrderError("block split must be nonnegative")

    def key(self, b):
        k = self.split
        return self.first.key(b[:k]) + self.second.key(b[k:])

    def check_length(self, n: int) -> None:
        if n < self.split:
            raise DimensionMismatchError(f"block split {self.split} exceeds {n} variables")
        self.first.check_length(self.split)
        self.second.check_length(n - self.split)

    def __str__(self) -> str:
        return f"block({self.split}: {self.first}, {self.second})"


def compare(order: MonomialOrder, a: ExponentVector, b: ExponentVector) -> Ordering:
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot compare exponent vectors of lengths {len(a)} and {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Ordering.EQ
    return Ordering.GT if ka > kb else Ordering.LT


def order_from_name(name: str) -> MonomialOrder:
    orders = {"lex": Lex(), "grevlex": GrevLex()}
    try:
        return orders[name.lower()]
    except KeyError:
        raise OrderError(f"unknown monomial order {name!r}; expected one of {sorted(orders)}") from None
