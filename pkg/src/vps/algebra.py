"""Finite-dimensional commutative algebras given by structure constants."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

from .errors import NotAssociative, NotLocal
from .linalg import det, kernel, rank, rref

Vector = List[Fraction]


@dataclass(frozen=True)
class AlgebraTable:
    """``mult[i][j]`` is the product of basis elements ``i`` and ``j`` as a coordinate vector."""

    basis: Tuple[str, ...]
    unit: int
    mult: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def multiply(self, a: Sequence, b: Sequence) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not a[i]:
                continue
            for j in range(n):
                if not b[j]:
                    continue
                f = a[i] * b[j]
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        out[k] += f * c
        return out

    def element(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mult[i][j] == self.mult[j][i] for i in range(n) for j in range(i))

    def associativity_defects(self) -> list:
        """Triples ``i <= j <= k`` whose three bracketings disagree."""
        n = self.dim
        bad = []
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    ei, ej, ek = self.element(i), self.element(j), self.element(k)
                    a = self.multiply(self.multiply(ei, ej), ek)
                    b = self.multiply(ei, self.multiply(ej, ek))
                    c = self.multiply(ej, self.multiply(ei, ek))
                    if not (a == b == c):
                        bad.append((i, j, k))
        return bad

    def is_associative(self) -> bool:
        return self.is_commutative() and not self.associativity_defects()

    def multiplication_matrix(self, a: Sequence) -> List[Vector]:
        """Matrix (columns = images of basis vectors) of multiplication by ``a``."""
        cols = [self.multiply(a, self.element(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def non_unit_indices(self) -> list:
        return [i for i in range(self.dim) if i != self.unit]

    def is_local(self) -> bool:
        """The span of the non-unit basis vectors is a nilpotent ideal."""
        idx = self.non_unit_indices()
        for i in idx:
            for j in range(self.dim):
                prod_ = self.mult[i][j]
                if prod_[self.unit]:
                    return False
        n = self.dim
        # nilpotent: every product of n elements of the ideal vanishes
        layer = [self.element(i) for i in idx]
        for _ in range(n):
            nxt = []
            for v in layer:
                for i in idx:
                    w = self.multiply(v, self.element(i))
                    if any(w):
                        nxt.append(w)
            if not nxt:
                return True
            r, _ = rref(nxt)
            layer = r
        return False

    def socle(self) -> List[Vector]:
        """Annihilator of the span of the non-unit basis vectors."""
        if not self.is_local():
            raise NotLocal("non-unit basis vectors do not span a nilpotent ideal")
        n = self.dim
        rows = []
        for i in self.non_unit_indices():
            # s * e_i = 0 is linear in s
            for k in range(n):
                rows.append([self.mult[j][i][k] for j in range(n)])
        return kernel(rows, n)

    def pairing_matrix(self, psi: Sequence) -> List[Vector]:
        n = self.dim
        return [[sum((psi[k] * c for k, c in enumerate(self.mult[i][j])), Fraction(0)) for j in range(n)] for i in range(n)]

    def is_gorenstein(self, seed: int = 0, trials: int = 24) -> bool:
        """Whether some functional makes ``(a, b) -> psi(ab)`` nondegenerate.

        Random functionals give a certificate for ``True``.  A local algebra
        is decided exactly through its socle; otherwise the determinant, a
        polynomial of degree ``n`` in the functional, is sampled on a grid
        large enough to prove it vanishes identically.
        """
        if not self.is_associative():
            raise NotAssociative("structure constants are not associative")
        n = self.dim
        for i in range(n):
            psi = self.element(i)
            if det(self.pairing_matrix(psi)):
                return True
        rnd = random.Random(seed)
        for _ in range(trials):
            psi = [Fraction(rnd.randint(-9, 9)) for _ in range(n)]
            if det(self.pairing_matrix(psi)):
                return True
        if self.is_local():
            return len(self.socle()) == 1
        for psi in product(range(n + 1), repeat=n):
            if det(self.pairing_matrix([Fraction(v) for v in psi])):
                return True
        return False

    def minimal_polynomial(self, a: Sequence) -> List[Fraction]:
        """Monic minimal polynomial of ``a``, coefficients from the constant term up."""
        powers = [self.element(self.unit)]
        while True:
            nxt = self.multiply(powers[-1], a)
            cols = powers + [nxt]
            m = [[c[i] for c in cols] for i in range(self.dim)]
            ker = kernel(m, len(cols))
            if ker:
                v = ker[0]
                lead = v[-1]
                return [c / lead for c in v]
            powers.append(nxt)


def truncated_polynomial_algebra(n: int) -> AlgebraTable:
    """``Q[t]/(t^n)`` on the basis ``1, t, ..., t^(n-1)``."""
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [Fraction(0)] * n
            if i + j < n:
                v[i + j] = Fraction(1)
            row.append(tuple(v))
        mult.append(tuple(row))
    return AlgebraTable(tuple(["1"] + [f"t^{k}" for k in range(1, n)]), 0, tuple(mult))


def square_zero_algebra(n: int) -> AlgebraTable:
    """Unit plus an ``n-1`` dimensional ideal with all products zero."""
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [Fraction(0)] * n
            if i == 0:
                v[j] = Fraction(1)
            elif j == 0:
                v[i] = Fraction(1)
            row.append(tuple(v))
        mult.append(tuple(row))
    return AlgebraTable(tuple(["1"] + [f"u{k}" for k in range(1, n)]), 0, tuple(mult))


def table_rank(table: AlgebraTable, psi: Sequence) -> int:
    return rank(table.pairing_matrix(psi))
