# Ideals, Groebner bases, gradings and the ideal-level constructions
from .grading import ADegree, GradingMatrix, a_degree
from .groebner import (
    Ideal,
    buchberger,
    contains,
    ideal_contains,
    ideal_equal,
    is_unit_ideal,
    normal_form,
    reduced_basis,
    s_polynomial,
)
from .operations import (
    ExtendedRing,
    eliminate,
    extend_ring,
    rabinowitsch,
    saturate,
    substitute_grading,
    torus_contraction,
)

__all__ = [
    "ADegree",
    "GradingMatrix",
    "a_degree",
    "Ideal",
    "buchberger",
    "contains",
    "ideal_contains",
    "ideal_equal",
    "is_unit_ideal",
    "normal_form",
    "reduced_basis",
    "s_polynomial",
    "ExtendedRing",
    "eliminate",
    "extend_ring",
    "rabinowitsch",
    "saturate",
    "substitute_grading",
    "torus_contraction",
]
