from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from vps.errors import DivisionByZero
from vps.linalg import (Echelon, congruence_diagonalize, det, identity, inverse, kernel, matmul, rank, rank_mod_p,
                        rref, solve, transpose)
from vps.scalars import Fp

from conftest import matrices, small_fractions


def _sym(m):
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in r] for r in m])


@given(matrices(4, 5))
def test_rank_matches_sympy(m):
    assert rank(m) == _sym(m).rank()


@given(matrices(4, 4))
def test_det_matches_sympy(m):
    assert det(m) == Fraction(str(_sym(m).det()))


@given(matrices(3, 5))
def test_rref_is_idempotent(m):
    r, pivots = rref(m)
    again, pivots2 = rref(r)
    assert again == r and pivots == pivots2
    assert len(pivots) == rank(m)


@given(matrices(3, 5))
def test_kernel_is_annihilated(m):
    ker = kernel(m, 5)
    assert len(ker) == 5 - rank(m)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@given(matrices(3, 3))
def test_inverse(m):
    if det(m) == 0:
        return
    assert matmul(m, inverse(m)) == identity(3)


@given(matrices(3, 3), st.lists(small_fractions, min_size=3, max_size=3))
def test_solve(m, b):
    x = solve(m, b)
    if x is None:
        assert rank(m) < 3
    else:
        assert [sum(a * c for a, c in zip(row, x)) for row in m] == b


@given(matrices(3, 3))
def test_congruence_diagonalization(m):
    sym = [[m[i][j] + m[j][i] for j in range(3)] for i in range(3)]
    p, d = congruence_diagonalize(sym)
    prod = matmul(matmul(transpose(p), sym), p)
    assert all(prod[i][j] == (d[i] if i == j else 0) for i in range(3) for j in range(3))
    assert det(p) != 0


def test_rank_mod_p_sees_characteristic():
    m = [[1, 1], [1, 4]]
    assert rank(m) == 2
    assert rank_mod_p(m, 3) == 1


def test_prime_field_arithmetic():
    a = Fp(Fraction(1, 2), 7)
    assert a * 2 == Fp(1, 7)
    assert Fp(3, 7) / Fp(3, 7) == Fp(1, 7)
    with pytest.raises(DivisionByZero):
        Fp(Fraction(1, 7), 7)


def test_echelon_membership():
    ech = Echelon(lambda k: k)
    assert ech.add({0: Fraction(1), 1: Fraction(2)})
    assert ech.add({1: Fraction(1)})
    assert not ech.add({0: Fraction(3), 1: Fraction(-5)})
    assert ech.contains({0: Fraction(1)})
    assert len(ech) == 2
