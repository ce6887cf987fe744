from fractions import Fraction

from monideal.poly.field import QQ, PrimeField
from monideal.tasks.linear import EchelonForm


def test_rational_rows_are_fully_reduced():
    space = EchelonForm(QQ)
    assert space.add({0: 2, 1: 4})
    assert space.add({0: 1, 1: 3})
    assert not space.add({0: 5, 1: -7})
    assert space.dimension == 2
    assert space.rows() == [{0: 1}, {1: 1}]
    assert space.contains({1: 5})


def test_rational_entries_are_cleared_without_fractions_in_storage():
    space = EchelonForm(QQ)
    space.add({0: Fraction(1, 2), 1: Fraction(1, 3)})
    assert space.rows() == [{0: 1, 1: Fraction(2, 3)}]
    assert space.residual({0: 1, 1: 1}) == {1: Fraction(1, 3)}
    assert space.contains({0: 3, 1: 2})
    assert not space.contains({0: 1})


def test_residual_is_linear():
    space = EchelonForm(QQ)
    space.add({0: 1, 2: -1})
    space.add({1: 1, 2: 1})
    a, b = {0: 1, 2: 3}, {1: 2}
    total = {0: 1, 1: 2, 2: 3}
    ra, rb, rt = space.residual(a), space.residual(b), space.residual(total)
    assert {k: ra.get(k, 0) + rb.get(k, 0) for k in set(ra) | set(rb)} == rt


def test_prime_field_rows_are_monic():
    space = EchelonForm(PrimeField(7))
    space.add({0: 3, 1: 1})
    assert space.rows() == [{0: 1, 1: 5}]
    assert space.contains({0: 6, 1: 2})
    assert not space.contains({0: 1, 1: 1})
    assert not space.add({0: 13, 1: 2})
    assert space.add({0: 7, 1: 1})
    assert space.dimension == 2


def test_custom_rank_moves_the_pivot():
    space = EchelonForm(QQ, rank=lambda col: -col)
    space.add({0: 2, 1: 1})
    (row,) = space.rows()
    assert space.pivot(row) == 1
    assert row == {1: 1, 0: 2}


def test_empty_and_zero_rows():
    space = EchelonForm(QQ)
    assert not space.add({})
    assert not space.add({3: 0})
    assert space.dimension == 0
    assert space.contains({})
