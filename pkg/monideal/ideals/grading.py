"""Integer grading matrices and the A-degree map b -> A b."""

from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from monideal.errors import DimensionMismatchError
from monideal.poly.monomial import ExponentVector

ADegree = Tuple[int, ...]


@dataclass(frozen=True)
class GradingMatrix:
    """A d x n integer matrix; column i is the degree of the i-th variable.

    Entries are arbitrary Python integers and may be negative; the array
    holds them as objects so products never wrap. ``d = 0`` is allowed and
    grades everything by the empty vector.
    """

    n: int
    rows: Tuple[Tuple[int, ...], ...] = ()
    array: np.ndarray = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        for row in rows:
            if len(row) != self.n:
                raise DimensionMismatchError(f"grading row {row} has {len(row)} entries, expected {self.n}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "array", np.array(rows, dtype=object).reshape(len(rows), self.n))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int = None) -> "GradingMatrix":
        rows = [list(r) for r in rows]
        if n is None:
            if not rows:
                raise DimensionMismatchError("cannot infer the column count of an empty grading")
            n = len(rows[0])
        return cls(n, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "GradingMatrix":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "GradingMatrix":
        """The 0 x n matrix: every ideal is graded by it."""
        return cls(n, ())

    @classmethod
    def total_degree(cls, n: int) -> "GradingMatrix":
        return cls(n, ((1,) * n,))

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.d, self.n

    def column(self, i: int) -> Tuple[int, ...]:
        if not 0 <= i < self.n:
            raise DimensionMismatchError(f"column {i} out of range for {self.n} columns")
        return tuple(row[i] for row in self.rows)

    def degree(self, b: ExponentVector) -> ADegree:
        if len(b) != self.n:
            raise DimensionMismatchError(f"exponent vector of length {len(b)} graded by a {self.d}x{self.n} matrix")
        return tuple(int(v) for v in self.array.dot(np.array(b, dtype=object)))


def a_degree(b: ExponentVector, grading: GradingMatrix) -> ADegree:
    return grading.degree(b)
