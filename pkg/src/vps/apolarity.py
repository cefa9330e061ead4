"""Quadrics, their apolar ideals, and finite schemes of length ``n``.

``T = Q[y1..yn]`` holds the forms, ``S = Q[x1..xn]`` holds the operators,
``x_i`` acting as ``d/dy_i``.  A quadric ``q`` is stored together with its
symmetric matrix ``M`` normalised by ``q = 1/2 v^T M v``; in particular
``M[i][i]`` is twice the coefficient of ``y_i^2``.  Points of projective space
are coefficient vectors of linear forms in ``T``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from .algebra import AlgebraTable
from .errors import (CayleySingular, DegenerateForm, DegeneratePoints, NoDecomposition, NonHomogeneous,
                     NotApolar, NotAssociative, NotDirectSum, WrongDimension, ZeroVector)
from .linalg import congruence_diagonalize, det, identity, inverse, kernel, matadd, matmul, rank, rref, solve
from .poly import Polynomial, Ring, diff_apply, parse, render
from .scalars import fraction_str
from .subspace import Subspace

Vector = List[Fraction]


# -- quadrics -----------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticForm:
    poly: Polynomial
    matrix: Tuple[Tuple[Fraction, ...], ...]

    @staticmethod
    def from_poly(poly: Polynomial) -> "QuadraticForm":
        if any(sum(e) != 2 for e in poly.terms):
            raise NonHomogeneous(f"not a quadratic form: {render(poly)}")
        n = poly.ring.nvars
        m = [[Fraction(0)] * n for _ in range(n)]
        for e, c in poly.terms.items():
            idx = [i for i, a in enumerate(e) for _ in range(a)]
            i, j = idx
            if i == j:
                m[i][i] = 2 * Fraction(c)
            else:
                m[i][j] = m[j][i] = Fraction(c)
        return QuadraticForm(poly, tuple(tuple(r) for r in m))

    @staticmethod
    def from_matrix(ring: Ring, m: Sequence[Sequence]) -> "QuadraticForm":
        n = ring.nvars
        if len(m) != n or any(len(r) != n for r in m):
            raise WrongDimension("matrix size does not match the ring")
        terms = {}
        for i in range(n):
            for j in range(i, n):
                e = [0] * n
                e[i] += 1
                e[j] += 1
                v = Fraction(m[i][j])
                if i == j:
                    v /= 2
                elif Fraction(m[j][i]) != v:
                    raise WrongDimension("matrix is not symmetric")
                if v:
                    terms[tuple(e)] = v
        poly = Polynomial(ring, terms)
        return QuadraticForm(poly, tuple(tuple(Fraction(v) for v in r) for r in m))

    @staticmethod
    def parse(text: str, ring: Ring) -> "QuadraticForm":
        return QuadraticForm.from_poly(parse(text, ring))

    @property
    def ring(self) -> Ring:
        return self.poly.ring

    @property
    def n(self) -> int:
        return self.ring.nvars

    def mat(self) -> List[Vector]:
        return [list(r) for r in self.matrix]

    def rank(self) -> int:
        return rank(self.mat())

    def is_nondegenerate(self) -> bool:
        return det(self.mat()) != 0

    def value(self, v: Sequence) -> Fraction:
        return self.poly.evaluate([Fraction(x) for x in v])

    def __str__(self):
        return render(self.poly)


def standard_quadric(n: int) -> QuadraticForm:
    """``2 y1 yn + y2^2 + ... + y(n-1)^2``."""
    ring = Ring.y(n)
    p = 2 * ring.var(0) * ring.var(n - 1)
    for i in range(1, n - 1):
        p = p + ring.var(i) ** 2
    return QuadraticForm.from_poly(p)


def sum_of_squares(n: int, weights: Sequence | None = None) -> QuadraticForm:
    ring = Ring.y(n)
    weights = weights or [1] * n
    return QuadraticForm.from_poly(sum((Fraction(w) * ring.var(i) ** 2 for i, w in enumerate(weights)), ring.zero()))


def hyperbolic_quadric(n: int) -> QuadraticForm:
    """``sum_k y_k y_(n+1-k)``."""
    ring = Ring.y(n)
    p = ring.zero()
    for k in range(n):
        p = p + ring.var(k) * ring.var(n - 1 - k)
    return QuadraticForm.from_poly(p)


def _require_nondegenerate(q: QuadraticForm):
    if not q.is_nondegenerate():
        raise DegenerateForm(f"quadric {q} is degenerate")


def operator_ring(q: QuadraticForm) -> Ring:
    return Ring.x(q.n)


def perp_space(q: QuadraticForm) -> Subspace:
    """Quadratic operators annihilating ``q``."""
    s = operator_ring(q)
    mons = s.monomials(2)
    vals = [diff_apply(Polynomial(s, {e: Fraction(1)}), q.poly).coeff((0,) * q.n) for e in mons]
    gens = []
    for v in kernel([vals], len(mons)):
        gens.append(Polynomial(s, {e: c for e, c in zip(mons, v) if c}))
    return Subspace(s, gens, 2)


def inverse_form(q: QuadraticForm) -> QuadraticForm:
    """The quadric in ``S`` whose matrix is the inverse of ``q``'s."""
    _require_nondegenerate(q)
    return QuadraticForm.from_matrix(operator_ring(q), inverse(q.mat()))


def linear_form(ring: Ring, v: Sequence) -> Polynomial:
    n = ring.nvars
    terms = {}
    for i, c in enumerate(v):
        if c:
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = Fraction(c)
    return Polynomial(ring, terms)


def vector_of(l: Polynomial) -> Vector:
    n = l.ring.nvars
    if any(sum(e) != 1 for e in l.terms):
        raise NonHomogeneous(f"not a linear form: {render(l)}")
    v = [Fraction(0)] * n
    for e, c in l.terms.items():
        v[e.index(1)] = Fraction(c)
    return v


def collineation(q: QuadraticForm) -> List[Vector]:
    """Matrix of ``l -> l(q)`` from linear operators to linear forms."""
    return q.mat()


def is_apolar(ideal: Iterable[Polynomial], q: QuadraticForm) -> bool:
    return all(diff_apply(g, q.poly).is_zero() for g in ideal)


# -- schemes of length n ------------------------------------------------------

def _as_vector(p) -> Vector:
    if isinstance(p, Polynomial):
        return vector_of(p)
    return [Fraction(c) for c in p]


def ideal_of_points(points: Sequence, tangents: Sequence | None = None, degree: int = 2) -> Subspace:
    """Degree-``degree`` forms vanishing on the given points.

    ``tangents`` optionally pairs a point with a tangent direction; the forms
    must then also have zero derivative at that point in that direction,
    which describes a point of multiplicity two.
    """
    pts = [_as_vector(p) for p in points]
    tans = [(_as_vector(p), _as_vector(t)) for p, t in (tangents or [])]
    vectors = pts + [p for p, _ in tans]
    if not vectors:
        raise DegeneratePoints("no points given")
    n = len(vectors[0])
    s = Ring.x(n)
    mons = s.monomials(degree)
    rows = []
    for v in pts:
        rows.append([Polynomial(s, {e: Fraction(1)}).evaluate(v) for e in mons])
    for v, t in tans:
        row = []
        for e in mons:
            m = Polynomial(s, {e: Fraction(1)})
            row.append(sum((t[i] * m.diff(i).evaluate(v) for i in range(n) if t[i]), Fraction(0)))
        rows.append(row)
        rows.append([Polynomial(s, {e: Fraction(1)}).evaluate(v) for e in mons])
    if rank(vectors) < len(vectors):
        raise DegeneratePoints("points are linearly dependent")
    length = len(pts) + 2 * len(tans)
    if rank(rows) < length:
        raise DegeneratePoints(f"conditions imposed by the scheme are dependent ({rank(rows)} < {length})")
    gens = []
    for v in kernel(rows, len(mons)):
        gens.append(Polynomial(s, {e: c for e, c in zip(mons, v) if c}))
    return Subspace(s, gens, degree)


def decompose_form(q: QuadraticForm, u1: Sequence, u2: Sequence) -> Tuple[QuadraticForm, QuadraticForm]:
    """Write ``q = q1 + q2`` with ``q_i`` a quadric in the span of ``u_i``.

    ``u1`` and ``u2`` are bases (vectors or linear forms) of complementary
    subspaces of the linear forms.
    """
    b1 = [_as_vector(u) for u in u1]
    b2 = [_as_vector(u) for u in u2]
    n = q.n
    if len(b1) + len(b2) != n or rank(b1 + b2) != n:
        raise NotDirectSum("subspaces are not complementary")
    t = q.ring
    forms1 = [linear_form(t, v) for v in b1]
    forms2 = [linear_form(t, v) for v in b2]
    prods = []
    for forms, tag in ((forms1, 0), (forms2, 1)):
        for i in range(len(forms)):
            for j in range(i, len(forms)):
                prods.append((tag, forms[i] * forms[j]))
    mons = t.monomials(2)
    m = [[p.coeff(e) for _, p in prods] for e in mons]
    rhs = [q.poly.coeff(e) for e in mons]
    sol = solve(m, rhs)
    if sol is None:
        raise NoDecomposition("q has mixed terms across the two subspaces")
    parts = [t.zero(), t.zero()]
    for c, (tag, p) in zip(sol, prods):
        if c:
            parts[tag] = parts[tag] + p * c
    return QuadraticForm.from_poly(parts[0]), QuadraticForm.from_poly(parts[1])


def meets_hyperplane(ideal: Subspace, l) -> bool:
    """Whether some nonzero element of the ideal is divisible by the linear operator ``l``."""
    s = ideal.ring
    lin = l if isinstance(l, Polynomial) else linear_form(s, l)
    if not lin:
        raise ZeroVector("the hyperplane needs a nonzero linear form")
    multiples = Subspace(s, [lin * v for v in s.gens()], 2)
    return ideal.intersect(multiples).dim > 0


def pluecker_coords(ideal: Subspace, q: QuadraticForm, perp_basis: Sequence[Polynomial] | None = None) -> List[Fraction]:
    """Maximal minors of the ideal written in a basis of the apolar space of ``q``.

    Minors are listed over column subsets in lexicographic order and scaled so
    the first nonzero one is 1.
    """
    if perp_basis is None:
        perp_basis = perp_space(q).basis
    for g in ideal.basis:
        if not diff_apply(g, q.poly).is_zero():
            raise NotApolar(f"{render(g)} does not annihilate {q}")
    mons = sorted({e for b in perp_basis for e in b.terms} | {e for g in ideal.basis for e in g.terms})
    cols = [[b.coeff(e) for b in perp_basis] for e in mons]
    rows = []
    for g in ideal.basis:
        coords = solve(cols, [g.coeff(e) for e in mons])
        if coords is None:
            raise NotApolar("generator outside the supplied basis")
        rows.append(coords)
    k = len(rows)
    minors = []
    for sub in combinations(range(len(perp_basis)), k):
        minors.append(det([[r[c] for c in sub] for r in rows]))
    lead = next((v for v in minors if v), None)
    if lead is None:
        raise WrongDimension("ideal basis is rank deficient")
    return [v / lead for v in minors]


# -- random polar simplices ---------------------------------------------------

def _random_skew(n: int, rnd: random.Random) -> List[Vector]:
    s = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rnd.randint(-3, 3), rnd.randint(1, 3))
            s[i][j] = v
            s[j][i] = -v
    return s


def random_polar_simplex(q: QuadraticForm, seed: int = 0, retries: int = 64) -> Tuple[List[Vector], List[Fraction]]:
    """Points ``l_i`` and weights ``c_i`` with ``q = sum c_i l_i^2``.

    A congruence diagonalisation gives one solution; it is moved by a Cayley
    transform ``(I-K)(I+K)^{-1}`` of a random ``q``-skew ``K``, which keeps ``q``.
    """
    _require_nondegenerate(q)
    n = q.n
    m = q.mat()
    p, d = congruence_diagonalize(m)
    base = inverse(p)  # m = base^T diag(d) base
    minv = inverse(m)
    rnd = random.Random(seed)
    for _ in range(retries):
        k = matmul(minv, _random_skew(n, rnd))
        plus = matadd(identity(n), k)
        if det(plus) == 0:
            continue
        r = matmul(matadd(identity(n), k, -1), inverse(plus))
        rows = matmul(base, r)
        weights = [v / 2 for v in d]
        return [list(row) for row in rows], weights
    raise CayleySingular(f"no invertible Cayley transform after {retries} draws")


def simplex_to_form(points: Sequence, weights: Sequence, ring: Ring) -> Polynomial:
    out = ring.zero()
    for v, c in zip(points, weights):
        l = linear_form(ring, v)
        out = out + l * l * Fraction(c)
    return out


# -- algebras with a pairing --------------------------------------------------

def gorenstein_form(table: AlgebraTable, psi: Sequence) -> QuadraticForm:
    """Quadric ``a -> psi(a^2)`` on the algebra, as a form in ``y1..yn``.

    Basis vector ``i`` of the table corresponds to ``y_(i+1)``.  Its rank is
    ``n`` exactly when ``psi`` makes the algebra Gorenstein.
    """
    if not table.is_associative():
        raise NotAssociative("structure constants are not associative")
    ring = Ring.y(table.dim)
    return QuadraticForm.from_matrix(ring, table.pairing_matrix([Fraction(v) for v in psi]))


def socle_functional(table: AlgebraTable, values: Sequence) -> Vector:
    """Extend a functional given on a socle basis by zero on a complement.

    The complement is spanned by the basis vectors not used as pivots of the
    socle basis in reduced echelon form.
    """
    soc = table.socle()
    if len(values) != len(soc):
        raise WrongDimension(f"socle has dimension {len(soc)}")
    r, pivots = rref(soc)
    # psi(e_j) = 0 off the pivots; solve for the pivot values
    psi = [Fraction(0)] * table.dim
    for row, c, val in zip(r, pivots, values):
        psi[c] = Fraction(val)
    return psi


# -- serialisation -------------------------------------------------------------

def scheme_to_json(ideal: Subspace) -> str:
    return json.dumps({"n": ideal.ring.nvars, "repr": "ideal", "generators": [render(g) for g in ideal.basis]})


def scheme_from_json(text: str) -> Subspace:
    data = json.loads(text)
    n = int(data["n"])
    s = Ring.x(n)
    if data.get("repr", "ideal") == "points":
        pts = [[Fraction(c) for c in p] for p in data["points"]]
        return ideal_of_points(pts)
    return Subspace(s, [parse(g, s) for g in data["generators"]], 2)


def vector_str(v: Sequence) -> List[str]:
    return [fraction_str(Fraction(c)) for c in v]
