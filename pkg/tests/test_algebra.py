from fractions import Fraction

import pytest

from vps.algebra import AlgebraTable, square_zero_algebra, table_rank, truncated_polynomial_algebra
from vps.errors import NotAssociative, NotLocal
from vps import upoly


def test_truncated_algebra():
    t = truncated_polynomial_algebra(4)
    assert t.is_associative() and t.is_local()
    assert t.minimal_polynomial([0, 1, 0, 0]) == [0, 0, 0, 0, 1]
    assert table_rank(t, [0, 0, 0, 1]) == 4


def test_product_of_fields_is_not_local():
    e = (Fraction(1), Fraction(0))
    f = (Fraction(0), Fraction(1))
    z = (Fraction(0), Fraction(0))
    table = AlgebraTable(("e", "f"), 0, ((e, z), (z, f)))
    assert table.is_associative()
    assert not table.is_local()
    with pytest.raises(NotLocal):
        table.socle()
    assert upoly.is_squarefree(table.minimal_polynomial([1, 2]))


def test_non_associative_table():
    one = (Fraction(1), Fraction(0))
    u = (Fraction(0), Fraction(1))
    table = AlgebraTable(("1", "u"), 0, ((one, u), (u, one)))
    assert table.is_associative()
    bad = AlgebraTable(("1", "u"), 0, ((one, u), (one, one)))
    assert not bad.is_associative()
    with pytest.raises(NotAssociative):
        bad.is_gorenstein()


def test_square_zero_socle():
    z = square_zero_algebra(4)
    assert len(z.socle()) == 3
    assert not z.is_gorenstein()
    assert square_zero_algebra(2).is_gorenstein()
