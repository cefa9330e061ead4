from math import comb

import pytest
from hypothesis import given, strategies as st

from vps.apolarity import ideal_of_points, perp_space, random_polar_simplex, standard_quadric, sum_of_squares
from vps.errors import OutOfRange, TooLarge
from vps.poly import Ring, parse
from vps.resolution import GradedQuotient, betti_numbers, expected_betti, expected_table, hilbert_function


def test_complete_intersection_of_two_quadrics():
    ring = Ring.x(2)
    quot = GradedQuotient(ring, [parse("x1^2", ring), parse("x2^2", ring)])
    table = betti_numbers(quot, 2).nonzero()
    assert table == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert hilbert_function(quot, 3) == [1, 2, 1, 0]


def test_polynomial_ring_is_free():
    quot = GradedQuotient(Ring.x(3), [])
    assert betti_numbers(quot, 3).nonzero() == {(0, 0): 1}
    assert hilbert_function(quot, 2) == [1, 3, 6]


@given(st.integers(3, 5), st.integers(0, 10 ** 6))
def test_points_have_constant_hilbert_function(n, seed):
    pts, _ = random_polar_simplex(sum_of_squares(n), seed)
    quot = GradedQuotient(Ring.x(n), ideal_of_points(pts).basis)
    assert hilbert_function(quot, 4) == [1] + [n] * 4


@pytest.mark.parametrize("n", [3, 4, 5])
def test_apolar_algebra(n):
    quot = GradedQuotient(Ring.x(n), perp_space(standard_quadric(n)).basis)
    assert hilbert_function(quot, 3) == [1, n, 1, 0]
    assert betti_numbers(quot, n).nonzero() == expected_table("aq", n)


def test_closed_forms_are_symmetric():
    # the resolution of a Gorenstein algebra is self-dual
    for n in range(3, 9):
        vals = [expected_betti("aq", n, k) for k in range(1, n)]
        assert vals == vals[::-1]
        assert expected_betti("points", n, 1) == comb(n, 2)


def test_bounds():
    with pytest.raises(OutOfRange):
        expected_betti("aq", 4, 4)
    with pytest.raises(OutOfRange):
        betti_numbers(GradedQuotient(Ring.x(2), []), 3)
    with pytest.raises(TooLarge):
        hilbert_function(GradedQuotient(Ring.x(2), []), 20)


def test_render():
    ring = Ring.x(2)
    quot = GradedQuotient(ring, [parse("x1^2", ring), parse("x2^2", ring)])
    text = betti_numbers(quot, 2).render()
    assert text.splitlines()[0].split() == ["0", "1", "2"]
