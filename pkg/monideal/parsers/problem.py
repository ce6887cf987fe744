"""Line-oriented problem files.

    # comment
    vars x y z
    field QQ            (or: field Fp 32003; defaults to settings.DEFAULT_FIELD)
    poly x^2 + y^2 - 1
    poly x*y
    grading 2 3         (optional; followed by 2 rows of 3 integers)
    1 1 0
    0 -1 1

``#`` starts a comment anywhere on a line. ``vars`` must appear exactly
once; ``field`` at most once. Errors carry 1-based line and column.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from monideal.config import settings
from monideal.errors import ExponentOverflowError, InvalidRingError, NonPrimeModulusError, ProblemSyntaxError
from monideal.ideals.grading import GradingMatrix
from monideal.ideals.groebner import Ideal
from monideal.parsers.expression import ExpressionError, parse_polynomial
from monideal.poly.field import Field, PrimeField, field_from_name
from monideal.poly.orders import MonomialOrder, order_from_name
from monideal.poly.polynomial import Polynomial, format_polynomial
from monideal.poly.ring import VARIABLE_NAME, RingContext

_DIRECTIVE = re.compile(r"[ \t]*([A-Za-z]+)")
_WORD = re.compile(r"\S+")
_INTEGER = re.compile(r"[+-]?\d+\Z")


@dataclass(frozen=True)
class ProblemFile:
    ring: RingContext
    polynomials: Tuple[Polynomial, ...]
    grading: Optional[GradingMatrix] = None

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.polynomials)


class _Line:
    """One source line with comments stripped."""

    def __init__(self, number: int, raw: str):
        self.number = number
        self.content = raw.split("#", 1)[0]

    def words(self, start: int = 0) -> List[Tuple[str, int]]:
        """Whitespace-separated words after ``start`` with their 1-based columns."""
        return [(m.group(), m.start() + 1) for m in _WORD.finditer(self.content, start)]

    def error(self, message: str, column: Optional[int] = None) -> ProblemSyntaxError:
        return ProblemSyntaxError(message, self.number, column)


def _parse_int(word: str, column: int, line: _Line, what: str) -> int:
    if not _INTEGER.match(word):
        raise line.error(f"expected an integer for {what}, got {word!r}", column)
    return int(word)


def _parse_field(line: _Line, start: int) -> Field:
    words = line.words(start)
    if not words:
        raise line.error("'field' needs 'QQ' or 'Fp <prime>'", start + 1)
    name, column = words[0]
    if name == "QQ" and len(words) == 1:
        return field_from_name("QQ")
    if name == "Fp" and len(words) == 2:
        modulus, modulus_column = words[1]
        p = _parse_int(modulus, modulus_column, line, "the modulus")
        try:
            return PrimeField(p)
        except NonPrimeModulusError as exc:
            raise line.error(f"non-prime modulus: {exc}", modulus_column) from None
    raise line.error(f"unknown field declaration {' '.join(w for w, _ in words)!r}", column)


def parse_problem(text: str, order: Optional[MonomialOrder] = None) -> ProblemFile:
    """Parse problem text; the ring gets ``order`` (default ``settings.DEFAULT_ORDER``)."""
    order = order or order_from_name(settings.DEFAULT_ORDER)
    lines = [_Line(i + 1, raw) for i, raw in enumerate(text.splitlines())]

    names: Optional[List[str]] = None
    field: Optional[Field] = None
    poly_lines: List[Tuple[_Line, int]] = []
    grading_rows: Optional[List[Tuple[int, ...]]] = None
    grading_decl: Optional[Tuple[_Line, int, int]] = None

    index = 0
    while index < len(lines):
        line = lines[index]
        index += 1
        if not line.content.strip():
            continue
        match = _DIRECTIVE.match(line.content)
        if match is None:
            raise line.error("expected a directive (vars, field, poly, grading)", 1)
        keyword, start = match.group(1), match.end()
        if start < len(line.content) and not line.content[start].isspace():
            raise line.error(f"unknown directive {line.content.split()[0]!r}", match.start(1) + 1)

        if keyword == "vars":
            if names is not None:
                raise line.error("'vars' declared twice", match.start(1) + 1)
            names = []
            for word, column in line.words(start):
                if not VARIABLE_NAME.match(word):
                    raise line.error(f"invalid variable name {word!r}", column)
                if word in names:
                    raise line.error(f"variable {word!r} declared twice", column)
                names.append(word)
            if not names:
                raise line.error("'vars' needs at least one variable name", start + 1)
        elif keyword == "field":
            if field is not None:
                raise line.error("'field' declared twice", match.start(1) + 1)
            field = _parse_field(line, start)
        elif keyword == "poly":
            poly_lines.append((line, start))
        elif keyword == "grading":
            if grading_decl is not None:
                raise line.error("'grading' declared twice", match.start(1) + 1)
            words = line.words(start)
            if len(words) != 2:
                raise line.error("matrix shape mismatch: 'grading' needs a row count and a column count", start + 1)
            d = _parse_int(*words[0], line, "the row count")
            n = _parse_int(*words[1], line, "the column count")
            if d < 0 or n < 0:
                raise line.error("matrix shape mismatch: negative dimension", words[0][1])
            grading_decl = (line, n, words[1][1])
            grading_rows = []
            while len(grading_rows) < d:
                if index >= len(lines):
                    raise line.error(f"matrix shape mismatch: expected {d} rows, found {len(grading_rows)}")
                row_line = lines[index]
                index += 1
                if not row_line.content.strip():
                    continue
                entries = row_line.words()
                if len(entries) != n:
                    raise row_line.error(
                        f"matrix shape mismatch: expected {n} entries, found {len(entries)}", entries[0][1]
                    )
                grading_rows.append(tuple(_parse_int(w, c, row_line, "a matrix entry") for w, c in entries))
        else:
            raise line.error(f"unknown directive {keyword!r}", match.start(1) + 1)

    if names is None:
        raise ProblemSyntaxError("missing 'vars' declaration", poly_lines[0][0].number if poly_lines else 1)
    if field is None:
        field = field_from_name(settings.DEFAULT_FIELD)
    try:
        ring = RingContext(tuple(names), field, order)
    except InvalidRingError as exc:
        raise ProblemSyntaxError(str(exc), 1) from None

    grading = None
    if grading_decl is not None:
        decl_line, n, column = grading_decl
        if n != ring.nvars:
            raise decl_line.error(
                f"matrix shape mismatch: grading has {n} columns but {ring.nvars} variables are declared", column
            )
        grading = GradingMatrix(n, tuple(grading_rows))

    polynomials = []
    for line, start in poly_lines:
        expression = line.content[start:]
        try:
            polynomials.append(parse_polynomial(expression, ring))
        except ExpressionError as exc:
            offset = len(expression.rstrip()) if exc.position is None else exc.position
            raise line.error(exc.message, start + offset + 1) from None
        except ExponentOverflowError as exc:
            indent = len(expression) - len(expression.lstrip())
            raise line.error(str(exc), start + indent + 1) from None
    return ProblemFile(ring, tuple(polynomials), grading)


def format_problem(problem: ProblemFile) -> str:
    """Canonical text; ``parse_problem`` of the result gives back an equal problem."""
    ring = problem.ring
    out = [f"vars {' '.join(ring.variable_names)}", f"field {ring.field}"]
    out.extend(f"poly {format_polynomial(p)}" for p in problem.polynomials)
    if problem.grading is not None:
        out.append(f"grading {problem.grading.d} {problem.grading.n}")
        out.extend(" ".join(str(v) for v in row) for row in problem.grading.rows)
    return "\n".join(out) + "\n"
