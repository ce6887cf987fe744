"""Brute-force certification of largest A-graded subideals at a degree bound.

Under a degree-compatible order every element of I of degree <= D is a
combination of multiples m*g of reduced basis elements with deg(m*g) <= D.
Those products span the finite-dimensional space I_{<=D}, so containment,
gradedness and maximality of a candidate up to degree D reduce to exact
linear algebra over the ring's field. The verdict is a desk-scale check, not
a proof beyond D.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from monideal.config import settings
from monideal.errors import DimensionMismatchError, OraclePreconditionError, OrderError, RingMismatchError
from monideal.ideals.grading import ADegree, GradingMatrix
from monideal.ideals.groebner import Ideal, ideal_contains, normal_form
from monideal.logging_config import get_logger
from monideal.poly.monomial import ExponentVector, monomial_mul, monomials_up_to_degree
from monideal.poly.orders import GrevLex
from monideal.poly.polynomial import Polynomial
from monideal.poly.ring import RingContext
from monideal.tasks.linear import EchelonForm, Row

logger = get_logger(__name__)

_GREVLEX = GrevLex()


def default_oracle_degree(nvars: int) -> int:
    if nvars <= 3:
        return settings.ORACLE_DEGREE_SMALL
    if nvars == 4:
        return settings.ORACLE_DEGREE_LARGE
    return settings.ORACLE_DEGREE_FALLBACK


def monomial_basis(nvars: int, degree: int) -> Tuple[ExponentVector, ...]:
    """Monomials of degree <= ``degree``, grevlex-descending; position is the column index."""
    return tuple(sorted(monomials_up_to_degree(nvars, degree), key=_GREVLEX.key, reverse=True))


class TruncatedIdealSpace:
    """The vector space I_{<=D} in coordinates over the monomial basis."""

    def __init__(self, ring: RingContext, degree: int, space: EchelonForm):
        self.ring = ring
        self.degree = degree
        self.monomials = monomial_basis(ring.nvars, degree)
        self.columns = {m: i for i, m in enumerate(self.monomials)}
        self.space = space

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def vector(self, f: Polynomial) -> Row:
        if f.ring.variable_names != self.ring.variable_names or f.ring.field != self.ring.field:
            raise RingMismatchError(f"polynomial over {f.ring} used with a truncation of {self.ring}")
        try:
            return {self.columns[t.monomial]: t.coeff for t in f.terms}
        except KeyError:
            raise DimensionMismatchError(f"{f} has degree above the truncation degree {self.degree}") from None

    def polynomial(self, row: Row) -> Polynomial:
        return Polynomial(self.ring, [(value, self.monomials[col]) for col, value in row.items()])

    def contains(self, f: Polynomial) -> bool:
        return self.space.contains(self.vector(f))

    def basis(self) -> List[Polynomial]:
        return [self.polynomial(row) for row in self.space.rows()]


def truncate(ideal: Ideal, degree: int) -> TruncatedIdealSpace:
    """Span of {m*g : g in the reduced basis, deg(m*g) <= degree}, i.e. I_{<=degree}."""
    ring = ideal.ring
    if not ring.order.is_degree_compatible:
        raise OrderError(f"truncation needs a degree-compatible order, got {ring.order}")
    if degree < 0:
        raise ValueError(f"degree bound must be nonnegative, got {degree}")
    space = EchelonForm(ring.field)
    truncated = TruncatedIdealSpace(ring, degree, space)
    for g in ideal.groebner_basis():
        room = degree - g.total_degree()
        if room < 0:
            continue
        for m in monomials_up_to_degree(ring.nvars, room):
            space.add({truncated.columns[monomial_mul(t.monomial, m)]: t.coeff for t in g.terms})
    logger.debug("ideal_truncated", variables=list(ring.variable_names), degree=degree, dimension=space.dimension)
    return truncated


def _class_order(truncated: TruncatedIdealSpace, grading: GradingMatrix) -> Dict[ADegree, List[int]]:
    """Columns grouped by A-degree.

    Classes are listed by their first monomial in (degree ascending, grevlex
    descending) order, so lower-degree classes and, within a degree, classes
    of grevlex-larger monomials come first.
    """
    walk = sorted(range(len(truncated.monomials)), key=lambda j: (sum(truncated.monomials[j]), j))
    classes: Dict[ADegree, List[int]] = defaultdict(list)
    for j in walk:
        classes[grading.degree(truncated.monomials[j])].append(j)
    return dict(classes)


def homogeneous_part(truncated: TruncatedIdealSpace, grading: GradingMatrix) -> Dict[ADegree, EchelonForm]:
    """For each A-degree class, the subspace of I_{<=D} supported on that class.

    A vector supported on the class lies in the space iff its residual
    vanishes, so each piece is the kernel of ``e_j -> residual(e_j)`` over
    the class columns, found by echelonizing the augmented rows
    ``[residual(e_j) | e_j]`` with residual columns ranked first.
    """
    if grading.n != truncated.ring.nvars:
        raise DimensionMismatchError(
            f"a {grading.d}x{grading.n} grading does not match {truncated.ring.nvars} variables"
        )
    field = truncated.ring.field
    pieces: Dict[ADegree, EchelonForm] = {}
    for degree_class, columns in _class_order(truncated, grading).items():
        augmented = EchelonForm(field, rank=lambda label: label)
        for j in columns:
            row = {("r", col): value for col, value in truncated.space.residual({j: field.one}).items()}
            row[("s", j)] = field.one
            augmented.add(row)
        piece = EchelonForm(field)
        for row in augmented.rows():
            if augmented.pivot(row)[0] == "s":
                piece.add({col: value for (tag, col), value in row.items()})
        pieces[degree_class] = piece
    return pieces


class VerdictStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a maximality check.

    On failure ``witness`` is A-homogeneous of class ``degree_class`` and lies
    in exactly one of the two ideals; ``missing_from`` names the one it is
    not in (``"candidate"`` or ``"ideal"``).
    """

    status: VerdictStatus
    degree: int
    witness: Optional[Polynomial] = None
    degree_class: Optional[ADegree] = None
    missing_from: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is VerdictStatus.PASS


def verify_maximality(ideal: Ideal, grading: GradingMatrix, candidate: Ideal, degree: int) -> Verdict:
    """Compare the A-homogeneous pieces of I and of the candidate up to ``degree``."""
    if candidate.ring != ideal.ring:
        raise RingMismatchError(f"candidate over {candidate.ring} checked against an ideal of {ideal.ring}")
    if grading.n != ideal.ring.nvars:
        raise DimensionMismatchError(
            f"a {grading.d}x{grading.n} grading does not match {ideal.ring.nvars} variables"
        )
    if not ideal_contains(ideal, candidate):
        raise OraclePreconditionError("the candidate is not contained in the ideal")

    ideal_parts = homogeneous_part(truncate(ideal.with_order(_GREVLEX), degree), grading)
    candidate_space = truncate(candidate.with_order(_GREVLEX), degree)
    candidate_parts = homogeneous_part(candidate_space, grading)

    for degree_class, ideal_piece in ideal_parts.items():
        candidate_piece = candidate_parts[degree_class]
        for side, have, other in (
            ("candidate", ideal_piece, candidate_piece),
            ("ideal", candidate_piece, ideal_piece),
        ):
            for row in have.rows():
                if not other.contains(row):
                    witness = Polynomial(ideal.ring, [(v, candidate_space.monomials[c]) for c, v in row.items()])
                    logger.info(
                        "maximality_failed",
                        degree=degree,
                        degree_class=list(degree_class),
                        missing_from=side,
                        witness=str(witness),
                    )
                    return Verdict(VerdictStatus.FAIL, degree, witness, degree_class, side)
    logger.info("maximality_passed", degree=degree, classes=len(ideal_parts))
    return Verdict(VerdictStatus.PASS, degree)


def brute_force_monomials(ideal: Ideal, degree: int) -> FrozenSet[ExponentVector]:
    """{b : deg b <= degree, NF(x^b) = 0}, one normal form per monomial."""
    gb = ideal.groebner_basis()
    ring = ideal.ring
    return frozenset(
        b
        for b in monomials_up_to_degree(ring.nvars, degree)
        if not normal_form(Polynomial.monomial(ring, b), gb)
    )
