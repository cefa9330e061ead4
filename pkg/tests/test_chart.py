from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from vps.apolarity import ideal_of_points, pluecker_coords, random_polar_simplex, standard_quadric
from vps.chart import (FREE_PARAMS, ChartPoint, chart_ideal, chart_parameterize, chart_params, chart_system,
                       gamma_p, gamma_s_ideal, loc_equations, loc_word_equations, mult_table, normal_form,
                       on_chart, param_weight, parameterization, residuals, sec_coordinates, sec_equations,
                       sec_sample_scheme, vero_equations, vero_point, vero_support_point)
from vps.errors import NotApolar, NotInChart, OutOfRange, Unsupported, WrongDimension, ZeroVector
from vps.ideals import ideals_equal, same_radical
from vps.poly import Ring
from vps.subspace import Subspace

seeds = st.integers(0, 10 ** 6)


def _chart_point(n, seed):
    """Normal form of a random polar simplex, or None when it leaves the chart."""
    pts, _ = random_polar_simplex(standard_quadric(n), seed)
    try:
        return normal_form(ideal_of_points(pts))
    except NotInChart:
        return None


@given(st.integers(3, 5), seeds)
def test_round_trip(n, seed):
    a = _chart_point(n, seed)
    if a is None:
        return
    assert on_chart(a)
    assert mult_table(a).is_associative()
    assert normal_form(chart_ideal(a)) == a


@given(st.integers(3, 5), seeds, st.integers(-3, 3).filter(bool))
def test_torus_scaling_preserves_the_chart(n, seed, t):
    a = _chart_point(n, seed)
    if a is None:
        return
    scaled = ChartPoint.from_mapping(n, {p: v * Fraction(t) ** param_weight(*p, n) for p, v in a.as_dict().items()})
    assert not any(residuals(scaled))


@given(st.integers(3, 5), st.data())
def test_parameterization_lands_on_the_chart(n, data):
    free = data.draw(st.lists(st.integers(-3, 3), min_size=len(FREE_PARAMS[n]), max_size=len(FREE_PARAMS[n])))
    a = chart_parameterize(n, free)
    assert not any(residuals(a))
    assert chart_ideal(a).dim == comb(n, 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_parameterization_solves_the_generators(n):
    ring, images = parameterization(n)
    for g in chart_system(n).generators:
        assert g.substitute(list(images), ring).is_zero()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_symmetric_and_pair_generators_agree(n):
    cs = chart_system(n)
    pair = Subspace(cs.sym_ring, [cs.symmetrize(g) for g in cs.pair_generators])
    assert pair == Subspace(cs.sym_ring, cs.generators)
    assert all(not cs.symmetrize(f) for f in cs.linear_relations)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_generators_are_linear_in_minors(n):
    cs = chart_system(n)
    span = cs.minors_span()
    assert span.contains_all(cs.pair_generators)
    # the symmetrised generators only after adding the linear relations
    ring = cs.param_ring
    relations = list(cs.linear_relations) + [f * v for f in cs.linear_relations for v in ring.gens()]
    modulo = Subspace(ring, span.basis + relations)
    assert modulo.contains_all(cs.unsymmetrize(g) for g in cs.generators)


@given(seeds)
def test_chart_coordinates_match_pluecker_coordinates(seed):
    a = _chart_point(4, seed)
    if a is None:
        return
    ideal = chart_ideal(a)
    assert pluecker_coords(ideal, standard_quadric(4)) == pluecker_coords(chart_ideal(normal_form(ideal)),
                                                                          standard_quadric(4))


def test_gamma_p():
    a = gamma_p(4)
    assert on_chart(a)
    table = mult_table(a)
    assert table.is_local()
    # x_i^2 = x1 for every middle index, so the socle is spanned by x1
    assert table.socle() == [[1, 0, 0, 0]]
    assert table.is_gorenstein()


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4).filter(any))
def test_veronese_cone(s):
    n = len(s) + 2
    a = vero_point(s)
    assert not any(residuals(a))
    assert Subspace(Ring.x(n), gamma_s_ideal(s), 2) == chart_ideal(a)
    support = vero_support_point(s)
    assert all(g.evaluate(support) == 0 for g in gamma_s_ideal(s))
    point = chart_system(n).sym_point(a)
    assert all(e.evaluate(point) == 0 for e in vero_equations(n))


def test_veronese_needs_nonzero_s():
    with pytest.raises(ZeroVector):
        vero_point([0, 0])


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), seeds)
def test_sec_samples_satisfy_the_sec_equations(c, seed):
    try:
        a = normal_form(sec_sample_scheme(5, c, seed))
    except NotInChart:
        return
    assert not any(residuals(a))
    point = sec_coordinates(a)
    assert all(e.evaluate(point) == 0 for e in sec_equations(5))


def test_sec_sizes():
    assert len(sec_equations(4)) == 1
    assert len(sec_equations(5)) == 6


@pytest.mark.parametrize("n", [3, 4])
def test_local_equations_have_the_radical_of_the_nilpotency_conditions(n):
    assert same_radical(loc_equations(n), loc_word_equations(n), n + 1)


def test_local_five_is_a_linear_section_of_sec():
    loc = loc_equations(5)
    linear = [f for f in loc if f.degree() == 1]
    assert len(linear) == 3
    assert ideals_equal(loc, linear + sec_equations(5))


def test_loc_is_limited():
    with pytest.raises(Unsupported):
        loc_equations(6)


def test_normal_form_errors():
    x = Ring.x(3)
    with pytest.raises(WrongDimension):
        normal_form(Subspace(x, [x.var(0) * x.var(1)], 2))
    with pytest.raises(NotApolar):
        normal_form(Subspace(x, [x.var(0) * x.var(1), x.var(1) ** 2, x.var(0) * x.var(2)], 2))
    # this simplex has a vertex with last coordinate zero
    pts, _ = random_polar_simplex(standard_quadric(3), 4)
    assert pts[0][2] == 0
    with pytest.raises(NotInChart):
        normal_form(ideal_of_points(pts))


def test_chart_point_json_round_trip():
    a = chart_parameterize(4, [1, 2, -1, 0, 3, Fraction(1, 2)])
    assert ChartPoint.from_json(a.to_json()) == a
    assert len(a.values) == len(chart_params(4))


def test_chart_range():
    with pytest.raises(OutOfRange):
        chart_system(2)


def test_scheme_json_equations():
    data = chart_system(3).equations_json()
    assert data["generators"] == ["-a122^2 + a112*a222 + a113"]


def test_round_trip_is_seeded():
    assert _chart_point(4, 11) == _chart_point(4, 11)
