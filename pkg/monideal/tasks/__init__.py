# Computations: the A-graded pipeline and its brute-force oracle
from .agraded import (
    AGradedResult,
    compute_largest_agraded_subideal,
    compute_largest_monomial_subideal,
    contains_monomial,
    is_a_graded,
    is_homogeneous,
    largest_agraded_subideal,
    largest_monomial_subideal,
    monomials_up_to,
)
from .oracle import (
    TruncatedIdealSpace,
    Verdict,
    VerdictStatus,
    brute_force_monomials,
    default_oracle_degree,
    homogeneous_part,
    truncate,
    verify_maximality,
)

__all__ = [
    "AGradedResult",
    "compute_largest_agraded_subideal",
    "compute_largest_monomial_subideal",
    "contains_monomial",
    "is_a_graded",
    "is_homogeneous",
    "largest_agraded_subideal",
    "largest_monomial_subideal",
    "monomials_up_to",
    "TruncatedIdealSpace",
    "Verdict",
    "VerdictStatus",
    "brute_force_monomials",
    "default_oracle_degree",
    "homogeneous_part",
    "truncate",
    "verify_maximality",
]
