"""Homogeneous ideals handled one graded piece at a time.

An ideal generated by homogeneous polynomials is determined by its graded
pieces, and the piece of degree ``d`` is the span of all products of a
generator with a monomial of the complementary degree.  Everything here is
linear algebra in a fixed degree.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence

from .errors import NonHomogeneous
from .poly import Polynomial, Ring, monomial
from .subspace import Subspace


def _degree(f: Polynomial, weights: Sequence[int] | None = None) -> int:
    degs = f.weighted_degrees(weights or [1] * f.ring.nvars)
    if len(degs) != 1:
        raise NonHomogeneous("ideal generator is not homogeneous")
    return degs.pop()


def weighted_monomials(weights: Sequence[int], d: int) -> List[tuple]:
    """Exponent vectors of total weight ``d`` (all weights positive)."""
    out: List[tuple] = []

    def rec(i: int, left: int, acc: list):
        if i == len(weights):
            if left == 0:
                out.append(tuple(acc))
            return
        for a in range(left // weights[i] + 1):
            acc.append(a)
            rec(i + 1, left - a * weights[i], acc)
            acc.pop()

    rec(0, d, [])
    return out


def ideal_piece(gens: Sequence[Polynomial], ring: Ring, d: int, weights: Sequence[int] | None = None) -> Subspace:
    """Degree ``d`` part of the ideal generated by ``gens``."""
    polys = []
    mons: Dict[int, list] = {}
    for g in gens:
        if not g:
            continue
        e = d - _degree(g, weights)
        if e < 0:
            continue
        if e not in mons:
            exps = ring.monomials(e) if weights is None else weighted_monomials(weights, e)
            mons[e] = [monomial(ring, m) for m in exps]
        polys.extend(g * m for m in mons[e])
    return Subspace(ring, polys, d)


def ideal_contains(gens: Sequence[Polynomial], f: Polynomial, weights: Sequence[int] | None = None) -> bool:
    if not f:
        return True
    return f in ideal_piece(gens, f.ring, _degree(f, weights), weights)


def ideal_contains_all(gens: Sequence[Polynomial], polys: Iterable[Polynomial],
                       weights: Sequence[int] | None = None) -> bool:
    by_degree: Dict[int, List[Polynomial]] = {}
    for f in polys:
        if f:
            by_degree.setdefault(_degree(f, weights), []).append(f)
    for d, fs in by_degree.items():
        piece = ideal_piece(gens, fs[0].ring, d, weights)
        if not piece.contains_all(fs):
            return False
    return True


def ideals_equal(a: Sequence[Polynomial], b: Sequence[Polynomial], weights: Sequence[int] | None = None) -> bool:
    return ideal_contains_all(b, a, weights) and ideal_contains_all(a, b, weights)


def power_in_ideal(f: Polynomial, gens: Sequence[Polynomial], max_power: int) -> int:
    """Smallest ``k <= max_power`` with ``f^k`` in the ideal, or 0 if none."""
    power = f.ring.const(1)
    for k in range(1, max_power + 1):
        power = power * f
        if ideal_contains(gens, power):
            return k
    return 0


def same_radical(a: Sequence[Polynomial], b: Sequence[Polynomial], max_power: int) -> bool:
    """Sufficient test: every generator of each ideal has a bounded power in the other."""
    return all(power_in_ideal(f, b, max_power) for f in a if f) and all(
        power_in_ideal(f, a, max_power) for f in b if f)


def minimal_generators(gens: Iterable[Polynomial]) -> List[Polynomial]:
    """Homogeneous minimal generators, lowest degree first.

    In each degree the generators that are not already in the ideal of the
    lower-degree ones are reduced to a canonical basis of their span modulo
    that ideal piece.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    by_degree: Dict[int, List[Polynomial]] = {}
    for g in gens:
        by_degree.setdefault(_degree(g), []).append(g)
    out: List[Polynomial] = []
    for d in sorted(by_degree):
        lower = ideal_piece(out, ring, d) if out else Subspace(ring, [], d)
        reduced = [lower.reduce(g) for g in by_degree[d]]
        new = Subspace(ring, [g for g in reduced if g], d)
        out.extend(b for b in new.basis)
    return out
