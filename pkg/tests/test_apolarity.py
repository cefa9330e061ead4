from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from vps.algebra import square_zero_algebra, truncated_polynomial_algebra
from vps.apolarity import (QuadraticForm, decompose_form, gorenstein_form, ideal_of_points, inverse_form,
                           is_apolar, meets_hyperplane, perp_space, pluecker_coords, random_polar_simplex,
                           scheme_from_json, scheme_to_json, simplex_to_form, socle_functional, standard_quadric,
                           sum_of_squares)
from vps.errors import DegenerateForm, DegeneratePoints, NoDecomposition, NotApolar, NotDirectSum, ZeroVector
from vps.linalg import identity, matmul
from vps.poly import Ring
from vps.subspace import Subspace

ns = st.integers(3, 5)
seeds = st.integers(0, 10 ** 6)


@given(ns)
def test_perp_space_is_a_hyperplane(n):
    q = standard_quadric(n)
    assert perp_space(q).dim == comb(n + 1, 2) - 1


@given(ns, seeds)
def test_random_simplex_decomposes_the_quadric(n, seed):
    q = standard_quadric(n)
    pts, weights = random_polar_simplex(q, seed)
    assert simplex_to_form(pts, weights, q.ring) == q.poly
    ideal = ideal_of_points(pts)
    assert ideal.dim == comb(n, 2)
    assert is_apolar(ideal.basis, q)


def test_inverse_form():
    q = QuadraticForm.parse("y1^2 + y1*y2 + 3*y2^2", Ring.y(2))
    assert matmul(q.mat(), inverse_form(q).mat()) == identity(2)
    with pytest.raises(DegenerateForm):
        inverse_form(QuadraticForm.parse("y1^2", Ring.y(2)))


def test_points_must_be_independent():
    with pytest.raises(DegeneratePoints):
        ideal_of_points([[1, 0, 0], [2, 0, 0], [0, 1, 0]])


def test_double_point_has_length_two():
    ideal = ideal_of_points([[0, 0, 1]], tangents=[([1, 0, 0], [0, 1, 0])])
    x = Ring.x(3)
    # forms vanishing at e1, e3 and tangent to e2 at e1
    assert ideal == Subspace(x, [x["x1"] * x["x3"], x["x2"] ** 2, x["x2"] * x["x3"]], 2)


def test_decompose_form_block_diagonal():
    q = sum_of_squares(4, [1, 2, 3, 4])
    q1, q2 = decompose_form(q, [[1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert q1.poly + q2.poly == q.poly
    assert q1.poly.variables_used() == {0, 1}


def test_decompose_form_errors():
    q = QuadraticForm.parse("y1*y2 + y3^2", Ring.y(3))
    with pytest.raises(NoDecomposition):
        decompose_form(q, [[1, 0, 0]], [[0, 1, 0], [0, 0, 1]])
    with pytest.raises(NotDirectSum):
        decompose_form(q, [[1, 0, 0]], [[1, 0, 0], [0, 0, 1]])


def test_meets_hyperplane():
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    ideal = ideal_of_points(basis)
    assert meets_hyperplane(ideal, [1, 0, 0])
    assert not meets_hyperplane(ideal, [1, 1, 1])
    with pytest.raises(ZeroVector):
        meets_hyperplane(ideal, [0, 0, 0])


@given(seeds)
def test_pluecker_coordinates_do_not_depend_on_the_basis(seed):
    q = standard_quadric(4)
    pts, _ = random_polar_simplex(q, seed)
    ideal = ideal_of_points(pts)
    shuffled = Subspace(ideal.ring, [ideal.basis[0] + ideal.basis[1] * 3] + ideal.basis[1:], 2)
    assert pluecker_coords(ideal, q) == pluecker_coords(shuffled, q)


def test_pluecker_rejects_non_apolar():
    x = Ring.x(3)
    with pytest.raises(NotApolar):
        pluecker_coords(Subspace(x, [x.var(1) ** 2], 2), standard_quadric(3))


def test_gorenstein_forms():
    t = truncated_polynomial_algebra(4)
    psi = socle_functional(t, [1])
    assert gorenstein_form(t, psi).rank() == 4
    assert t.is_gorenstein()
    z = square_zero_algebra(3)
    assert not z.is_gorenstein()
    assert len(z.socle()) == 2


def test_scheme_json_round_trip():
    ideal = ideal_of_points([[1, 2, 0], [0, 1, 1], [1, 0, -1]])
    assert scheme_from_json(scheme_to_json(ideal)) == ideal


def test_fraction_weights():
    q = sum_of_squares(3, [Fraction(1, 2), 2, -3])
    pts, weights = random_polar_simplex(q, 7)
    assert simplex_to_form(pts, weights, q.ring) == q.poly
