"""Degree of the variety of polar simplices as a sum over partitions.

With ``m = n(n-1)/2`` the degree is

    sum over lam of  multinomial(m; lam) / prod_i (lam*_i)!  *  d_lam

where ``lam`` runs over partitions of ``m`` into ``n`` parts in ``[0, n-1]``,
``lam*_i`` counts the parts equal to ``i`` (``i >= 1``), and ``d_lam`` is the
coefficient of ``prod_i D_i^(n-1-lam_i)`` in ``prod_{i<j} (D_i + D_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, List, Tuple

from .errors import NonIntegral, OutOfRange
from .threads import ordered_map

# largest n covered by the golden values and integrality checks
VALIDATED_N = 8


@dataclass(frozen=True)
class Partition:
    n: int
    parts: Tuple[int, ...]

    @property
    def m(self) -> int:
        return comb(self.n, 2)

    @property
    def caps(self) -> Tuple[int, ...]:
        return tuple(self.n - 1 - p for p in self.parts)

    def multiplicities(self) -> Tuple[int, ...]:
        """``lam*_i`` for ``i = 1..n-1``."""
        return tuple(self.parts.count(i) for i in range(1, self.n))

    def multinomial(self) -> int:
        out = factorial(self.m)
        for p in self.parts:
            out //= factorial(p)
        return out

    def multiplicity_factorial(self) -> int:
        out = 1
        for k in self.multiplicities():
            out *= factorial(k)
        return out


def partitions(n: int) -> List[Partition]:
    """Partitions of ``C(n,2)`` into ``n`` parts in ``[0, n-1]``, reverse lexicographic."""
    if n < 2:
        raise OutOfRange("n must be at least 2")
    m = comb(n, 2)
    out: List[Partition] = []

    def rec(prefix: List[int], left: int, top: int):
        slots = n - len(prefix)
        if slots == 0:
            if left == 0:
                out.append(Partition(n, tuple(prefix)))
            return
        for p in range(min(top, left), -1, -1):
            if p * slots < left:
                break
            prefix.append(p)
            rec(prefix, left - p, p)
            prefix.pop()

    rec([], m, n - 1)
    return out


def capped_coefficient(n: int, caps: Tuple[int, ...]) -> int:
    """Coefficient of ``prod D_i^caps[i]`` in ``prod_{i<j} (D_i + D_j)``.

    Factors are multiplied in lexicographic order of ``(i, j)``.  A monomial is
    dropped as soon as an exponent exceeds its cap or can no longer reach it
    with the factors that remain.
    """
    if len(caps) != n:
        raise OutOfRange("one cap per variable")
    if sum(caps) != comb(n, 2) or min(caps, default=0) < 0:
        return 0
    factors = [(i, j) for i in range(n) for j in range(i + 1, n)]
    remaining = [n - 1] * n
    states: Dict[Tuple[int, ...], int] = {tuple([0] * n): 1}
    for i, j in factors:
        remaining[i] -= 1
        remaining[j] -= 1
        nxt: Dict[Tuple[int, ...], int] = {}
        for e, c in states.items():
            for pick in (i, j):
                other = j if pick == i else i
                if e[pick] + 1 > caps[pick]:
                    continue
                if e[other] + remaining[other] < caps[other]:
                    continue
                f = list(e)
                f[pick] += 1
                if f[pick] + remaining[pick] < caps[pick]:
                    continue
                key = tuple(f)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
        if not states:
            return 0
    return states.get(tuple(caps), 0)


def d_lambda(lam: Partition) -> int:
    return capped_coefficient(lam.n, lam.caps)


@dataclass(frozen=True)
class DegreeTerm:
    partition: Partition
    multinomial: int
    multiplicity_factorial: int
    d: int
    summand: int

    def as_dict(self) -> dict:
        return {
            "lambda": list(self.partition.parts),
            "multinomial": str(self.multinomial),
            "lambda_star_factorial": str(self.multiplicity_factorial),
            "d_lambda": str(self.d),
            "summand": str(self.summand),
        }


def degree_term(lam: Partition) -> DegreeTerm:
    d = d_lambda(lam)
    multi = lam.multinomial()
    den = lam.multiplicity_factorial()
    if (multi * d) % den:
        raise NonIntegral(f"non-integral summand for {lam.parts}")
    return DegreeTerm(lam, multi, den, d, multi * d // den)


def degree_terms(n: int, threads: int | None = None) -> List[DegreeTerm]:
    return ordered_map(degree_term, partitions(n), threads)


def vps_degree(n: int, threads: int | None = None) -> int:
    return sum(t.summand for t in degree_terms(n, threads))
