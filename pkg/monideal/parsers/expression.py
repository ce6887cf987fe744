"""Polynomial expressions: lexer and LALR grammar built with PLY.

Grammar (multiplication is always explicit, ``^`` takes a nonnegative
integer literal, ``a/b`` is a rational literal)::

    expression : expression PLUS term | expression MINUS term | term
    term       : term TIMES factor | factor
    factor     : MINUS factor | power
    power      : atom POWER | atom
    atom       : NUMBER | RATIONAL | NAME | LPAREN expression RPAREN

Parsing yields a small tuple AST that ``evaluate`` turns into a polynomial
of a given ring; positions are 0-based offsets into the expression text.
"""

from fractions import Fraction
from typing import Optional

import ply.lex as lex
import ply.yacc as yacc

from monideal.config import settings
from monideal.errors import ExponentOverflowError, FieldDivisionError
from monideal.poly.polynomial import Polynomial
from monideal.poly.ring import RingContext


class ExpressionError(Exception):
    """A parse or evaluation error at ``position`` (None: end of input)."""

    def __init__(self, message: str, position: Optional[int]):
        super().__init__(message)
        self.message = message
        self.position = position


tokens = ("NUMBER", "RATIONAL", "NAME", "POWER", "PLUS", "MINUS", "TIMES", "LPAREN", "RPAREN")

t_PLUS = r"\+"
t_MINUS = r"-"
t_TIMES = r"\*"
t_LPAREN = r"\("
t_RPAREN = r"\)"
t_ignore = " \t"


def t_RATIONAL(t):
    r"\d+/\d+"
    numerator, denominator = (int(part) for part in t.value.split("/"))
    if denominator == 0:
        raise ExpressionError(f"zero denominator in {t.value!r}", t.lexpos)
    t.value = (Fraction(numerator, denominator), t.lexpos)
    return t


def t_NUMBER(t):
    r"\d+"
    t.value = (int(t.value), t.lexpos)
    return t


def t_NAME(t):
    r"[A-Za-z][A-Za-z0-9_]*"
    t.value = (t.value, t.lexpos)
    return t


def t_POWER(t):
    r"\^[ \t]*[^\s+\-*()^]*"
    digits = t.value[1:].strip()
    if not digits.isdigit():
        raise ExpressionError(
            f"malformed exponent {t.value!r}: '^' takes a nonnegative integer literal", t.lexpos
        )
    exponent = int(digits)
    if exponent > settings.EXPONENT_BOUND:
        raise ExpressionError(f"malformed exponent {t.value!r}: exceeds {settings.EXPONENT_BOUND}", t.lexpos)
    t.value = (exponent, t.lexpos)
    return t


def t_error(t):
    raise ExpressionError(f"unexpected character {t.value[0]!r}", t.lexpos)


start = "expression"


def p_expression_plus(p):
    "expression : expression PLUS term"
    p[0] = ("add", p[1], p[3])


def p_expression_minus(p):
    "expression : expression MINUS term"
    p[0] = ("sub", p[1], p[3])


def p_expression_term(p):
    "expression : term"
    p[0] = p[1]


def p_term_times(p):
    "term : term TIMES factor"
    p[0] = ("mul", p[1], p[3])


def p_term_factor(p):
    "term : factor"
    p[0] = p[1]


def p_factor_negate(p):
    "factor : MINUS factor"
    p[0] = ("neg", p[2])


def p_factor_power(p):
    "factor : power"
    p[0] = p[1]


def p_power_exponent(p):
    "power : atom POWER"
    exponent, position = p[2]
    p[0] = ("pow", p[1], exponent, position)


def p_power_atom(p):
    "power : atom"
    p[0] = p[1]


def p_atom_number(p):
    """atom : NUMBER
    | RATIONAL"""
    value, position = p[1]
    p[0] = ("num", value, position)


def p_atom_name(p):
    "atom : NAME"
    name, position = p[1]
    p[0] = ("var", name, position)


def p_atom_group(p):
    "atom : LPAREN expression RPAREN"
    p[0] = p[2]


def p_error(tok):
    if tok is None:
        raise ExpressionError("unexpected end of expression", None)
    shown = tok.value[0] if isinstance(tok.value, tuple) else tok.value
    if tok.type in ("NAME", "NUMBER", "RATIONAL", "LPAREN"):
        raise ExpressionError(f"unexpected {str(shown)!r}; multiplication must be written with '*'", tok.lexpos)
    raise ExpressionError(f"unexpected {str(shown)!r}", tok.lexpos)


_lexer = lex.lex()
_parser = yacc.yacc(debug=False, write_tables=False, errorlog=yacc.NullLogger())


def parse_expression(text: str) -> tuple:
    """Parse ``text`` into an AST; raises ExpressionError."""
    if not text.strip():
        raise ExpressionError("empty expression", None)
    return _parser.parse(text, lexer=_lexer.clone())


def evaluate(node: tuple, ring: RingContext) -> Polynomial:
    """Build the polynomial an AST denotes in ``ring``."""
    kind = node[0]
    if kind == "num":
        try:
            return Polynomial.constant(ring, ring.field.convert(node[1]))
        except FieldDivisionError as exc:
            raise ExpressionError(str(exc), node[2]) from None
    if kind == "var":
        if node[1] not in ring.variable_names:
            raise ExpressionError(f"unknown variable {node[1]!r}", node[2])
        return Polynomial.variable(ring, node[1])
    if kind == "neg":
        return -evaluate(node[1], ring)
    if kind == "pow":
        try:
            return evaluate(node[1], ring) ** node[2]
        except ExponentOverflowError as exc:
            raise ExpressionError(str(exc), node[3]) from None
    left, right = evaluate(node[1], ring), evaluate(node[2], ring)
    if kind == "add":
        return left + right
    if kind == "sub":
        return left - right
    return left * right


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    return evaluate(parse_expression(text), ring)
