from itertools import combinations, product
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, strategies as st

from vps.errors import OutOfRange
from vps.intersection import Partition, capped_coefficient, d_lambda, degree_terms, partitions, vps_degree


def orientations_with_indegree(n, caps):
    """Brute force: each factor (D_i + D_j) picks one endpoint."""
    edges = list(combinations(range(n), 2))
    count = 0
    for picks in product((0, 1), repeat=len(edges)):
        deg = [0] * n
        for (i, j), b in zip(edges, picks):
            deg[j if b else i] += 1
        count += deg == list(caps)
    return count


def expanded_coefficient(n, caps):
    ds = sympy.symbols(f"d0:{n}")
    poly = sympy.Poly(sympy.prod([ds[i] + ds[j] for i, j in combinations(range(n), 2)]), *ds)
    return int(poly.coeff_monomial(sympy.prod([d ** c for d, c in zip(ds, caps)])))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_d_lambda_against_brute_force(n):
    for lam in partitions(n):
        assert d_lambda(lam) == orientations_with_indegree(n, lam.caps)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_capped_coefficient_against_expansion(n):
    for caps in product(range(n), repeat=n):
        if sum(caps) == comb(n, 2):
            assert capped_coefficient(n, caps) == expanded_coefficient(n, caps)


@given(st.integers(2, 6))
def test_coefficients_sum_to_all_orientations(n):
    total = sum(capped_coefficient(n, caps) for caps in product(range(n), repeat=n))
    assert total == 2 ** comb(n, 2)


@given(st.integers(2, 9))
def test_partitions_are_valid_and_ordered(n):
    parts = partitions(n)
    assert len(set(parts)) == len(parts)
    for lam in parts:
        assert sum(lam.parts) == comb(n, 2) and len(lam.parts) == n
        assert list(lam.parts) == sorted(lam.parts, reverse=True)
        assert max(lam.parts) <= n - 1
    assert [p.parts for p in parts] == sorted((p.parts for p in parts), reverse=True)


def test_partitions_of_four():
    assert [p.parts for p in partitions(4)] == [(3, 3, 0, 0), (3, 2, 1, 0), (3, 1, 1, 1), (2, 2, 2, 0), (2, 2, 1, 1)]


def test_multiplicities():
    lam = Partition(4, (3, 1, 1, 1))
    assert lam.multiplicities() == (3, 0, 1)
    assert lam.multiplicity_factorial() == factorial(3)
    assert lam.multinomial() == factorial(6) // factorial(3)


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 5), (4, 310), (5, 395780)])
def test_degree_values(n, expected):
    assert vps_degree(n) == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_summands_are_non_negative_integers(n):
    for term in degree_terms(n):
        assert term.summand >= 0
        assert term.summand * term.multiplicity_factorial == term.multinomial * term.d


def test_thread_count_does_not_change_terms():
    assert degree_terms(7, threads=1) == degree_terms(7, threads=6)


def test_small_n_rejected():
    with pytest.raises(OutOfRange):
        partitions(1)
