"""Exact sparse row spaces in reduced row-echelon form.

Rows are dicts mapping a column label to a nonzero field element. The
``rank`` callable orders column labels; a row's pivot is its lowest-ranked
column. Over QQ elimination is fraction-free: rows are kept as primitive
integer vectors and combined by cross-multiplication. Over Fp rows are monic
at their pivot and combined directly.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Any, Callable, Dict, Hashable, List, Optional

from monideal.poly.field import Field, RationalField, Scalar

Row = Dict[Hashable, Scalar]


def _identity(label: Hashable) -> Any:
    return label


def _primitive(row: Dict[Hashable, int]) -> Dict[Hashable, int]:
    content = 0
    for value in row.values():
        content = gcd(content, value)
        if content == 1:
            return row
    if content > 1:
        return {col: value // content for col, value in row.items()}
    return row


class EchelonForm:
    """A subspace of field^columns, grown one row at a time."""

    def __init__(self, field: Field, rank: Callable[[Hashable], Any] = _identity):
        self.field = field
        self.rank = rank
        self._integral = isinstance(field, RationalField)
        self._pivots: Dict[Hashable, Row] = {}
        self._normalized: Optional[Dict[Hashable, Row]] = None

    @property
    def dimension(self) -> int:
        return len(self._pivots)

    def pivot(self, row: Row) -> Hashable:
        return min(row, key=self.rank)

    def _prepare(self, row: Row) -> Row:
        if not self._integral:
            converted = {col: self.field.convert(value) for col, value in row.items()}
            return {col: value for col, value in converted.items() if value}
        row = {col: value for col, value in row.items() if value != 0}
        if not row:
            return row
        scale = lcm(*(Fraction(value).denominator for value in row.values()))
        return _primitive({col: int(Fraction(value) * scale) for col, value in row.items()})

    def _eliminate(self, row: Row, reducer: Row, column: Hashable) -> Row:
        """Clear ``row[column]`` using ``reducer``, whose pivot is ``column``."""
        if self._integral:
            a, b = reducer[column], row[column]
            out = {col: a * value for col, value in row.items()}
            for col, value in reducer.items():
                combined = out.get(col, 0) - b * value
                if combined:
                    out[col] = combined
                else:
                    out.pop(col, None)
            return _primitive(out)
        field = self.field
        b = row[column]
        out = dict(row)
        for col, value in reducer.items():
            combined = field.sub(out.get(col, 0), field.mul(b, value))
            if combined:
                out[col] = combined
            else:
                out.pop(col, None)
        return out

    def _reduce_prepared(self, row: Row) -> Row:
        for column in [col for col in row if col in self._pivots]:
            if column in row:
                row = self._eliminate(row, self._pivots[column], column)
        return row

    def add(self, row: Row) -> bool:
        """Insert a row; True iff the dimension grew."""
        reduced = self._reduce_prepared(self._prepare(row))
        if not reduced:
            return False
        pivot = self.pivot(reduced)
        if self._integral:
            if reduced[pivot] < 0:
                reduced = {col: -value for col, value in reduced.items()}
        else:
            inverse = self.field.inv(reduced[pivot])
            reduced = {col: self.field.mul(inverse, value) for col, value in reduced.items()}
        for column, existing in list(self._pivots.items()):
            if pivot in existing:
                self._pivots[column] = self._eliminate(existing, reduced, pivot)
        self._pivots[pivot] = reduced
        self._normalized = None
        return True

    def rows(self) -> List[Row]:
        """Basis rows with pivot coefficient 1, in increasing pivot rank."""
        if self._normalized is None:
            normalized = {}
            for column, row in self._pivots.items():
                if self._integral:
                    lead = row[column]
                    normalized[column] = {col: Fraction(value, lead) for col, value in row.items()}
                else:
                    normalized[column] = dict(row)
            self._normalized = normalized
        return [self._normalized[col] for col in sorted(self._normalized, key=self.rank)]

    def residual(self, row: Row) -> Row:
        """``row`` minus its projection on the space along the pivot columns.

        Linear in ``row`` and zero exactly on the subspace.
        """
        field = self.field
        self.rows()
        out = {col: field.convert(value) for col, value in row.items() if value != 0}
        for column in [col for col in out if col in self._normalized]:
            b = out.get(column)
            if not b:
                continue
            for col, value in self._normalized[column].items():
                combined = field.sub(out.get(col, field.zero), field.mul(b, value))
                if combined:
                    out[col] = combined
                else:
                    out.pop(col, None)
        return out

    def contains(self, row: Row) -> bool:
        return not self.residual(row)
