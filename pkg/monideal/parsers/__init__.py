# Text formats: polynomial expressions and problem files
from .expression import ExpressionError, evaluate, parse_expression, parse_polynomial
from .problem import ProblemFile, format_problem, parse_problem

__all__ = [
    "ExpressionError",
    "evaluate",
    "parse_expression",
    "parse_polynomial",
    "ProblemFile",
    "format_problem",
    "parse_problem",
]
