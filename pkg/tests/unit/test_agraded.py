import random
import time

import pytest

from monideal.errors import DimensionMismatchError
from monideal.ideals.grading import GradingMatrix
from monideal.ideals.groebner import Ideal, ideal_contains, ideal_equal
from monideal.ideals.operations import ExtendedRing, substitute_grading, torus_contraction
from monideal.parsers.expression import parse_polynomial
from monideal.poly.field import QQ
from monideal.poly.orders import Lex
from monideal.poly.polynomial import Polynomial
from monideal.poly.ring import RingContext
from monideal.tasks.agraded import (
    compute_largest_agraded_subideal,
    compute_largest_monomial_subideal,
    contains_monomial,
    is_a_graded,
    is_homogeneous,
    largest_agraded_subideal,
    largest_monomial_subideal,
    monomials_up_to,
)
from monideal.tasks.oracle import brute_force_monomials, verify_maximality
from tests.randomized import F32003, random_grading, random_ideal, seed_params

QQ_XY = RingContext(("x", "y"))
XYZ = ("x", "y", "z")
TOTAL = GradingMatrix.total_degree(2)
IDENTITY = GradingMatrix.identity(2)


def _ideal(*texts, ring=QQ_XY):
    return Ideal(ring, [parse_polynomial(text, ring) for text in texts])


def _gens(ideal):
    return [str(g) for g in ideal.generators]


@pytest.mark.parametrize(
    "gens, grading, expected",
    [
        (["x^2 + x*y", "y^3"], TOTAL, True),
        (["x + y^2"], TOTAL, False),
        (["x + y^2"], GradingMatrix.zero(2), True),
        (["x^2 + y^2", "x*y"], IDENTITY, False),
        (["x^2 + y"], GradingMatrix.from_rows([[1, 2]]), True),
    ],
)
def test_is_a_graded(gens, grading, expected):
    assert is_a_graded(_ideal(*gens), grading) is expected


def test_gradedness_is_judged_on_the_reduced_basis():
    # x + y^2 is not homogeneous, but the ideal is (x, y^2)
    assert is_a_graded(_ideal("x + y^2", "y^2"), IDENTITY)
    assert is_a_graded(_ideal("x + y", "x - y"), IDENTITY)
    assert not is_homogeneous(parse_polynomial("x + y^2", QQ_XY), TOTAL)


def test_homogeneity_with_wide_grading_entries():
    wide = GradingMatrix.from_rows([[2**62, 0]])
    assert not is_homogeneous(parse_polynomial("x^4 + 1", QQ_XY), wide)
    assert not is_a_graded(_ideal("x^4 + 1"), wide)
    assert is_homogeneous(parse_polynomial("x^4 + x^4*y", QQ_XY), wide)


@pytest.mark.parametrize(
    "gens, expected",
    [
        (["x"], ["x"]),
        (["x + y"], []),
        (["x^2 + y^2", "x*y"], ["x*y", "y^3", "x^3"]),
        (["x^2*y + x*y^2", "x + 1"], []),
    ],
)
def test_largest_monomial_subideal(gens, expected):
    assert _gens(largest_monomial_subideal(_ideal(*gens))) == expected


def test_largest_agraded_subideal_examples():
    graded = _ideal("x^2 + x*y", "y^3")
    assert ideal_equal(largest_agraded_subideal(graded, TOTAL), graded)
    arbitrary = _ideal("x^2 + y - 1", "x*y + 3")
    assert ideal_equal(largest_agraded_subideal(arbitrary, GradingMatrix.zero(2)), arbitrary)
    assert largest_agraded_subideal(_ideal("x + y"), IDENTITY).is_zero()
    assert largest_agraded_subideal(_ideal("x^2 + y"), TOTAL).is_zero()


def test_largest_agraded_subideal_with_negative_weights():
    # x*y has A-degree 0 under [1 -1], so x*y - 1 is homogeneous
    ideal = _ideal("x*y - 1", "x^2*y - x + y^3")
    result = largest_agraded_subideal(ideal, GradingMatrix.from_rows([[1, -1]]))
    assert ideal_contains(ideal, result)
    assert is_a_graded(result, GradingMatrix.from_rows([[1, -1]]))
    assert result.contains(parse_polynomial("x*y - 1", QQ_XY))


def test_result_is_presented_under_the_ring_order():
    lex = RingContext(("x", "y"), order=Lex())
    result = largest_monomial_subideal(_ideal("x^2 + y^2", "x*y", ring=lex))
    assert result.ring == lex
    assert _gens(result) == ["y^3", "x*y", "x^3"]


def test_report_records_every_stage():
    result = compute_largest_monomial_subideal(_ideal("x^2 + y^2", "x*y"))
    report = result.report
    assert report.operation == "largest_monomial_subideal"
    assert report.grading_shape == (2, 2)
    assert [stage.name for stage in report.stages] == [
        "groebner_basis",
        "substitute_grading",
        "saturate_and_eliminate",
        "reduced_basis",
    ]
    assert report.stages[1].variables == ["t1", "t2", "x", "y"]
    assert report.stages[-1].basis_size == 3
    assert report.flags == []
    assert report.output_generators == 3


@pytest.mark.parametrize(
    "gens, grading, flag",
    [
        ([], IDENTITY, "zero_ideal"),
        (["x + y"], GradingMatrix.zero(2), "empty_grading"),
        (["x*y", "x^3"], IDENTITY, "already_graded"),
    ],
)
def test_report_short_circuits(gens, grading, flag):
    result = compute_largest_agraded_subideal(_ideal(*gens), grading)
    assert result.report.flags == [flag]
    assert "substitute_grading" not in [stage.name for stage in result.report.stages]


def test_grading_width_must_match():
    with pytest.raises(DimensionMismatchError):
        largest_agraded_subideal(_ideal("x"), GradingMatrix.identity(3))


@pytest.mark.parametrize("gens, expected", [(["x"], True), (["x + y"], False), (["x^2 + y^2", "x*y"], True)])
def test_contains_monomial(gens, expected):
    assert contains_monomial(_ideal(*gens)) is expected


def test_monomials_up_to():
    assert monomials_up_to(_ideal("x"), 2) == {(1, 0), (2, 0), (1, 1)}
    assert monomials_up_to(_ideal("x + y"), 8) == frozenset()
    assert monomials_up_to(_ideal("x^2 + y^2", "x*y"), 3) == {(1, 1), (3, 0), (0, 3), (2, 1), (1, 2)}
    with pytest.raises(ValueError):
        monomials_up_to(_ideal("x"), -1)


@pytest.mark.parametrize("gens", [["x"], ["x + y"], ["x^2 + y^2", "x*y"]])
def test_curated_examples_are_maximal(gens):
    ideal = _ideal(*gens)
    assert verify_maximality(ideal, IDENTITY, largest_monomial_subideal(ideal), 8).passed


def _check_invariants(ideal, grading, result):
    assert ideal_contains(ideal, result)
    assert is_a_graded(result, grading)
    assert ideal_equal(largest_agraded_subideal(result, grading), result)


@pytest.mark.parametrize("seed", seed_params(50))
def test_monomials_match_brute_force(seed):
    rng = random.Random(seed)
    ideal = random_ideal(rng, RingContext(XYZ, F32003))
    found = monomials_up_to(ideal, 8)
    assert found == brute_force_monomials(ideal, 8)

    monomial_part = largest_monomial_subideal(ideal)
    assert contains_monomial(ideal) is (not monomial_part.is_zero())
    assert contains_monomial(ideal) is bool(found)
    _check_invariants(ideal, GradingMatrix.identity(3), monomial_part)


@pytest.mark.parametrize("seed", seed_params(30))
def test_general_gradings_are_maximal(seed):
    rng = random.Random(500 + seed)
    field = QQ if seed % 3 == 0 else F32003
    ideal = random_ideal(rng, RingContext(XYZ, field))
    grading = random_grading(rng)
    result = largest_agraded_subideal(ideal, grading)
    assert verify_maximality(ideal, grading, result, 6).passed
    _check_invariants(ideal, grading, result)


def test_mixed_sign_grading_finishes_quickly():
    # the instance behind seed 17 of test_general_gradings_are_maximal
    rng = random.Random(517)
    ideal = random_ideal(rng, RingContext(XYZ, F32003))
    grading = random_grading(rng)
    assert grading.rows == ((1, -1, -2), (-1, 2, 1))
    started = time.perf_counter()
    result = largest_agraded_subideal(ideal, grading)
    assert time.perf_counter() - started < 30.0
    assert verify_maximality(ideal, grading, result, 6).passed


@pytest.mark.parametrize("seed", seed_params(12, quick=2))
def test_torus_contraction_ignores_unit_shifts(seed):
    rng = random.Random(900 + seed)
    ideal = random_ideal(rng, RingContext(XYZ, F32003), max_gens=2)
    grading = random_grading(rng)
    ext = ExtendedRing.over(ideal.ring, grading.d)
    substituted = substitute_grading(ideal, grading)
    shifted = Ideal(
        ext.combined,
        [
            g.mul_term(1, tuple(rng.randint(0, 2) for _ in range(grading.d)) + (0,) * ideal.ring.nvars)
            for g in substituted.generators
        ],
    )
    assert ideal_equal(torus_contraction(ext, shifted), torus_contraction(ext, substituted))


def test_unit_ideal_stays_unit():
    ideal = Ideal.unit(QQ_XY)
    result = largest_agraded_subideal(ideal, GradingMatrix.from_rows([[1, -1]]))
    assert result.groebner_basis() == (Polynomial.one(QQ_XY),)
