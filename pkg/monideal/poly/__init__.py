# Exact polynomial arithmetic: fields, exponent vectors, orders, rings, polynomials
from .field import QQ, Field, PrimeField, RationalField, Scalar, field_from_name
from .monomial import ExponentVector, total_degree
from .orders import Block, GrevLex, Lex, MonomialOrder, Ordering, WeightedThenGrevLex, compare, order_from_name
from .polynomial import Polynomial, Term, format_monomial, format_polynomial, leading_term, poly_add, poly_mul
from .ring import RingContext, fresh_name

__all__ = [
    "QQ",
    "Field",
    "PrimeField",
    "RationalField",
    "Scalar",
    "field_from_name",
    "ExponentVector",
    "total_degree",
    "Block",
    "GrevLex",
    "Lex",
    "MonomialOrder",
    "Ordering",
    "WeightedThenGrevLex",
    "compare",
    "order_from_name",
    "Polynomial",
    "Term",
    "format_monomial",
    "format_polynomial",
    "leading_term",
    "poly_add",
    "poly_mul",
    "RingContext",
    "fresh_name",
]
