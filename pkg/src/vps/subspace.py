"""Finite-dimensional spaces of polynomials with a canonical basis.

The basis is the reduced row echelon form of any spanning set with respect
to the grevlex order on monomials, so two spaces are equal exactly when
their bases are equal term by term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence

from .errors import RingMismatch
from .linalg import Echelon, kernel
from .poly import Polynomial, Ring, grevlex_key


class Subspace:
    __slots__ = ("ring", "degree", "basis", "_ech")

    def __init__(self, ring: Ring, polys: Iterable[Polynomial] = (), degree: int | None = None):
        self.ring = ring
        self.degree = degree
        self._ech = Echelon(grevlex_key)
        for p in polys:
            if p.ring != ring:
                raise RingMismatch(f"{p.ring.names} is not {ring.names}")
            self._ech.add(dict(p.terms))
        self.basis: List[Polynomial] = [Polynomial(ring, row) for row in self._ech.sorted_rows()]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __contains__(self, p: Polynomial) -> bool:
        return self._ech.contains(dict(p.terms))

    def contains_all(self, polys: Iterable[Polynomial]) -> bool:
        return all(p in self for p in polys)

    def reduce(self, p: Polynomial) -> Polynomial:
        """Normal form of ``p`` modulo this space."""
        return Polynomial(self.ring, self._ech.reduce(dict(p.terms)))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ring == other.ring and [b.terms for b in self.basis] == [b.terms for b in other.basis]

    def __hash__(self):
        return hash((self.ring, tuple(frozenset(b.terms.items()) for b in self.basis)))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ring, list(self.basis) + list(other.basis), self.degree)

    def issubspace(self, other: "Subspace") -> bool:
        return all(b in other for b in self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ring != other.ring:
            raise RingMismatch("intersection across rings")
        if not self.basis or not other.basis:
            return Subspace(self.ring, [], self.degree)
        mons = sorted({e for b in self.basis + other.basis for e in b.terms}, key=grevlex_key, reverse=True)
        cols = self.basis + other.basis
        m = [[c.terms.get(e, Fraction(0)) for c in cols] for e in mons]
        out = []
        k = len(self.basis)
        for v in kernel(m, len(cols)):
            poly = self.ring.zero()
            for coef, b in zip(v[:k], self.basis):
                if coef:
                    poly = poly + b * coef
            out.append(poly)
        return Subspace(self.ring, out, self.degree)

    def coordinates(self, p: Polynomial) -> list:
        """Coefficients of ``p`` in the canonical basis (``p`` must lie in the span)."""
        coords = []
        rest = dict(p.terms)
        for b in self.basis:
            lead = b.leading_term()[0]
            coords.append(rest.get(lead, Fraction(0)))
        residue = p - sum((b * c for b, c in zip(self.basis, coords) if c), self.ring.zero())
        if residue:
            raise ValueError("polynomial is not in the span")
        return coords

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[str(b) for b in self.basis]})"


def span(polys: Sequence[Polynomial], ring: Ring | None = None, degree: int | None = None) -> Subspace:
    if ring is None:
        ring = polys[0].ring
    return Subspace(ring, polys, degree)
