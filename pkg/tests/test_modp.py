from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, strategies as st

from vps.chart import sec_equations
from vps.errors import NotOnVariety, TooLarge, Unsupported
from vps.modp import AffineSystem, count_points, jacobian_rank, solutions
from vps.poly import Ring, parse
from vps.scalars import Fp

from conftest import polynomials

primes = st.sampled_from([3, 5, 7])


@given(primes, st.integers(1, 6))
def test_empty_system_counts_every_point(p, v):
    assert count_points(AffineSystem.from_polys([], p, v)) == p ** v


@given(primes, st.integers(2, 5))
def test_linear_equation_cuts_one_dimension(p, v):
    ring = Ring.x(v)
    f = ring.var(0) + ring.var(v - 1) * 2 + ring.const(1)
    assert count_points(AffineSystem.from_polys([f], p, v)) == p ** (v - 1)


@given(polynomials(nvars=3, max_degree=2), primes)
def test_count_matches_direct_evaluation(f, p):
    assume(all(Fraction(c).denominator % p for c in f.terms.values()))
    system = AffineSystem.from_polys([f], p, 3)
    brute = [pt for pt in product(range(p), repeat=3) if Fp(f.evaluate(list(pt)), p) == 0]
    assert count_points(system) == len(brute)
    assert solutions(system) == brute


def test_fermat_conic():
    ring = Ring.x(2)
    # x^2 + y^2 = 1 has p - (-1/p) points
    f = parse("x1^2 + x2^2 - 1", ring)
    assert count_points(AffineSystem.from_polys([f], 3, 2)) == 4
    assert count_points(AffineSystem.from_polys([f], 5, 2)) == 4
    assert count_points(AffineSystem.from_polys([f], 7, 2)) == 8


def test_thread_invariance():
    system = AffineSystem.from_polys(sec_equations(5), 3)
    assert count_points(system, threads=1) == count_points(system, threads=5) == 963


def test_jacobian_rank():
    ring = Ring.x(2)
    f = parse("x1^2 - x2^3", ring)
    assert jacobian_rank([f], [1, 1]) == 1
    assert jacobian_rank([f], [0, 0]) == 0
    assert jacobian_rank([f], [1, 2], p=7) == 1
    with pytest.raises(NotOnVariety):
        jacobian_rank([f], [1, 2])


def test_guards():
    ring = Ring.x(20)
    with pytest.raises(TooLarge):
        count_points(AffineSystem.from_polys([ring.var(0)], 7, 20))
    with pytest.raises(Unsupported):
        AffineSystem.from_polys([ring.var(0)], 11, 20)
    with pytest.raises(Unsupported):
        AffineSystem.from_polys([ring.var(0) * Fraction(1, 3)], 3, 20)
