import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from vps.apolarity import QuadraticForm, is_apolar, standard_quadric, sum_of_squares
from vps.errors import DegenerateForm, RingMismatch
from vps.mukai import (curvilinear_scheme, eigensimplex, is_eigenvector, pencil_profile, tau, tau_image,
                       vanishes_at)
from vps.poly import Ring
from vps.verify import _conjugate, _move_ideal, _random_invertible, mukai_case

from conftest import small_fractions

seeds = st.integers(0, 10 ** 6)


def _random_symmetric(n, rnd):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = Fraction(rnd.randint(-4, 4))
    return QuadraticForm.from_matrix(Ring.y(n), m)


@given(st.integers(3, 5), seeds)
def test_image_is_apolar(n, seed):
    q = standard_quadric(n)
    q2 = _random_symmetric(n, random.Random(seed))
    assert is_apolar(tau_image(q, q2).basis, q)


@given(st.integers(3, 5), seeds, small_fractions, small_fractions)
def test_image_depends_only_on_the_pencil(n, seed, shift, scale):
    q = standard_quadric(n)
    q2 = _random_symmetric(n, random.Random(seed))
    if scale == 0:
        return
    moved = QuadraticForm.from_poly(q2.poly * scale + q.poly * shift)
    assert tau_image(q, moved) == tau_image(q, q2)


@given(st.integers(3, 5), seeds)
def test_image_is_covariant(n, seed):
    rnd = random.Random(seed)
    q = sum_of_squares(n, [1] * n)
    q2 = _random_symmetric(n, rnd)
    g = _random_invertible(n, rnd)
    assert tau_image(_conjugate(q, g), _conjugate(q2, g)) == _move_ideal(tau_image(q, q2), g)


def test_trivial_pencil_has_zero_image():
    q = standard_quadric(4)
    assert tau_image(q, q).dim == 0
    assert not pencil_profile(q, q).unique


def test_diagonal_pencil():
    q = sum_of_squares(3)
    q2 = sum_of_squares(3, [1, 2, 3])
    prof = pencil_profile(q, q2)
    assert prof.unique and prof.max_corank == 1
    result = eigensimplex(q, q2)
    assert result.kind == "points"
    assert sorted(result.eigenvalues) == [1, 2, 3]
    for p in result.points:
        assert is_eigenvector(q, q2, p)
        assert vanishes_at(q, q2, p)
    assert not vanishes_at(q, q2, [1, 1, 0])


def test_repeated_eigenvalue_has_corank_two():
    q = sum_of_squares(4)
    q2 = sum_of_squares(4, [1, 1, 2, 3])
    prof = pencil_profile(q, q2)
    assert not prof.unique and prof.max_corank == 2
    assert tau_image(q, q2).dim < comb(4, 2)


def test_irrational_eigenvalues_give_an_ideal():
    q = sum_of_squares(3)
    q2 = QuadraticForm.parse("y1*y2 + 2*y2^2 + 3*y3^2", Ring.y(3))
    result = eigensimplex(q, q2)
    assert result.kind == "ideal"
    assert result.ideal.dim == 3


@pytest.mark.parametrize("lengths", [(3,), (2, 1), (4,), (2, 2), (1, 3), (5,), (2, 3), (1, 2, 2)])
def test_curvilinear_schemes(lengths):
    ideal, q, q2 = curvilinear_scheme(lengths)
    n = sum(lengths)
    assert ideal.dim == comb(n, 2)
    assert is_apolar(ideal.basis, q)
    assert pencil_profile(q, q2).unique
    assert tau_image(q, q2) == ideal


@pytest.mark.parametrize("kind", ["diagonal", "conjugated", "nilpotent", "mixed", "repeated"])
def test_case_generator(kind):
    rnd = random.Random(5)
    q, q2, expected = mukai_case(kind, 4, rnd)
    image = tau_image(q, q2)
    if expected is None:
        assert image.dim < comb(4, 2)
    else:
        assert image == expected


def test_single_skew_form():
    q = sum_of_squares(3)
    q2 = sum_of_squares(3, [1, 2, 3])
    assert tau(q, q2, (0, 1)).poly in tau_image(q, q2)


def test_errors():
    with pytest.raises(DegenerateForm):
        tau_image(QuadraticForm.parse("y1^2", Ring.y(3)), sum_of_squares(3))
    with pytest.raises(RingMismatch):
        tau_image(sum_of_squares(3), sum_of_squares(4))
