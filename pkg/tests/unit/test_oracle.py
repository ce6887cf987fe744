import random

import pytest

from monideal.errors import DimensionMismatchError, OraclePreconditionError, OrderError, RingMismatchError
from monideal.ideals.grading import GradingMatrix
from monideal.ideals.groebner import Ideal, normal_form
from monideal.parsers.expression import parse_polynomial
from monideal.poly.orders import Lex
from monideal.poly.polynomial import Polynomial
from monideal.poly.ring import RingContext
from monideal.tasks.agraded import is_homogeneous
from monideal.tasks.oracle import (
    VerdictStatus,
    brute_force_monomials,
    default_oracle_degree,
    homogeneous_part,
    monomial_basis,
    truncate,
    verify_maximality,
)
from tests.randomized import F32003, random_grading, random_ideal, random_polynomial, seed_params

QQ_XY = RingContext(("x", "y"))
IDENTITY = GradingMatrix.identity(2)


def _ideal(*texts, ring=QQ_XY):
    return Ideal(ring, [parse_polynomial(text, ring) for text in texts])


def test_default_degree():
    assert [default_oracle_degree(n) for n in (1, 2, 3, 4, 5, 7)] == [8, 8, 8, 6, 4, 4]


def test_monomial_basis_is_grevlex_descending():
    assert monomial_basis(2, 1) == ((1, 0), (0, 1), (0, 0))
    assert len(monomial_basis(3, 8)) == 165


@pytest.mark.parametrize(
    "gens, degree, dimension",
    [(["x"], 1, 1), ([], 5, 0), (["x + y"], 2, 3), (["x"], 2, 3), (["1"], 2, 6)],
)
def test_truncate_dimension(gens, degree, dimension):
    assert truncate(_ideal(*gens), degree).dimension == dimension


def test_truncate_spans_the_expected_space():
    space = truncate(_ideal("x + y"), 2)
    for text in ("x + y", "x^2 + x*y", "x*y + y^2", "x^2 - y^2"):
        assert space.contains(parse_polynomial(text, QQ_XY))
    assert not space.contains(parse_polynomial("x^2", QQ_XY))
    assert [str(f) for f in space.basis()] == ["x^2 - y^2", "x*y + y^2", "x + y"]


def test_truncate_needs_degree_compatible_order():
    lex = RingContext(("x", "y"), order=Lex())
    with pytest.raises(OrderError):
        truncate(_ideal("x", ring=lex), 2)


def test_truncated_vector_rejects_high_degree():
    space = truncate(_ideal("x"), 1)
    with pytest.raises(DimensionMismatchError):
        space.vector(parse_polynomial("x^2", QQ_XY))


def test_homogeneous_part_of_a_line_is_empty_under_fine_grading():
    pieces = homogeneous_part(truncate(_ideal("x + y"), 2), IDENTITY)
    assert len(pieces) == 6
    assert all(piece.dimension == 0 for piece in pieces.values())


def test_homogeneous_part_under_total_degree():
    space = truncate(_ideal("x + y"), 1)
    pieces = homogeneous_part(space, GradingMatrix.total_degree(2))
    assert pieces[(0,)].dimension == 0
    assert [str(space.polynomial(row)) for row in pieces[(1,)].rows()] == ["x + y"]


def test_homogeneous_part_of_unit_ideal():
    space = truncate(Ideal.unit(QQ_XY), 0)
    pieces = homogeneous_part(space, IDENTITY)
    assert [str(space.polynomial(row)) for row in pieces[(0, 0)].rows()] == ["1"]


def test_homogeneous_part_rejects_wrong_width():
    with pytest.raises(DimensionMismatchError):
        homogeneous_part(truncate(_ideal("x"), 1), GradingMatrix.identity(3))


@pytest.mark.parametrize(
    "gens, candidate, degree",
    [
        (["x^2 + y^2", "x*y"], ["x*y", "x^3", "y^3"], 6),
        (["x + y"], [], 8),
        (["x"], ["x"], 8),
    ],
)
def test_verify_passes(gens, candidate, degree):
    verdict = verify_maximality(_ideal(*gens), IDENTITY, _ideal(*candidate), degree)
    assert verdict.status is VerdictStatus.PASS
    assert verdict.passed
    assert verdict.witness is None


def test_verify_reports_first_missing_class():
    verdict = verify_maximality(_ideal("x^2 + y^2", "x*y"), IDENTITY, _ideal("x*y"), 4)
    assert verdict.status is VerdictStatus.FAIL
    assert str(verdict.witness) == "x^3"
    assert verdict.degree_class == (3, 0)
    assert verdict.missing_from == "candidate"
    assert verdict.degree == 4


def test_verify_passes_below_the_first_missing_degree():
    verdict = verify_maximality(_ideal("x^2 + y^2", "x*y"), IDENTITY, _ideal("x*y"), 2)
    assert verdict.passed


def test_verify_witness_under_total_degree():
    ideal = _ideal("x^2 + y", "x*y")
    verdict = verify_maximality(ideal, GradingMatrix.total_degree(2), _ideal("x*y"), 3)
    assert not verdict.passed
    assert verdict.degree_class == (2,)
    assert str(verdict.witness) == "y^2"
    assert ideal.contains(verdict.witness)


def test_verify_preconditions():
    with pytest.raises(OraclePreconditionError):
        verify_maximality(_ideal("x*y"), IDENTITY, _ideal("x"), 4)
    other = RingContext(("x", "z"))
    with pytest.raises(RingMismatchError):
        verify_maximality(_ideal("x"), IDENTITY, _ideal("x", ring=other), 4)
    with pytest.raises(DimensionMismatchError):
        verify_maximality(_ideal("x"), GradingMatrix.identity(3), _ideal("x"), 4)


def test_brute_force_monomials():
    found = brute_force_monomials(_ideal("x^2 + y^2", "x*y"), 3)
    assert found == {(1, 1), (3, 0), (0, 3), (2, 1), (1, 2)}
    assert brute_force_monomials(_ideal("x + y"), 8) == frozenset()


@pytest.mark.parametrize("seed", seed_params(20, quick=3))
def test_truncations_grow_and_agree_with_normal_forms(seed):
    rng = random.Random(4000 + seed)
    ring = RingContext(("x", "y", "z"), F32003)
    ideal = random_ideal(rng, ring)
    gb = ideal.groebner_basis()
    dimensions = [truncate(ideal, degree).dimension for degree in range(6)]
    assert dimensions == sorted(dimensions)

    truncated = truncate(ideal, 5)
    for _ in range(4):
        member = Polynomial.zero(ring)
        for g in gb:
            room = 5 - g.total_degree()
            if room >= 0:
                member = member + random_polynomial(rng, ring, max_degree=room) * g
        noise = random_polynomial(rng, ring, max_degree=5)
        for f in (member, member + noise):
            assert truncated.contains(f) is normal_form(f, gb).is_zero()


@pytest.mark.parametrize("seed", seed_params(20, quick=3))
def test_failure_witnesses_are_homogeneous_members_missing_from_the_candidate(seed):
    rng = random.Random(4100 + seed)
    ring = RingContext(("x", "y", "z"), F32003)
    ideal = random_ideal(rng, ring)
    grading = random_grading(rng)
    gb = ideal.groebner_basis()
    if seed % 2 and gb:
        candidate = Ideal(ring, [gb[0] * Polynomial.variable(ring, "x")])
    else:
        candidate = Ideal(ring)
    verdict = verify_maximality(ideal, grading, candidate, 4)
    if verdict.passed:
        assert verdict.witness is None
        return
    witness = verdict.witness
    assert verdict.missing_from == "candidate"
    assert witness and witness.total_degree() <= 4
    assert is_homogeneous(witness, grading)
    assert grading.degree(witness.LM) == verdict.degree_class
    assert ideal.contains(witness)
    assert not candidate.contains(witness)
