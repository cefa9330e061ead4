"""The skew map from pairs of quadrics to common apolar quadrics.

For nondegenerate ``q`` and any ``q2`` the skew operator ``L`` (a 2-form on
the linear operators) is sent to the quadratic operator with matrix
``L M2 M^-1 - M^-1 M2 L``.  Every such operator annihilates both ``q`` and
``q2``.  Evaluated at a point ``v`` it vanishes for all ``L`` exactly when ``v``
is an eigenvector of ``M2 M^-1``, so the image is the quadratic part of the
ideal of the common apolar scheme whenever that scheme is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from .apolarity import QuadraticForm, _require_nondegenerate, ideal_of_points
from .errors import RingMismatch
from .linalg import det, inverse, kernel, matadd, matmul, matvec, rank
from .poly import Ring
from .subspace import Subspace
from . import upoly

Vector = List[Fraction]


def _check_pair(q: QuadraticForm, q2: QuadraticForm):
    if q.ring != q2.ring:
        raise RingMismatch("the two quadrics live in different rings")
    _require_nondegenerate(q)


def skew_basis(n: int, i: int, j: int) -> List[Vector]:
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(1)
    m[j][i] = Fraction(-1)
    return m


def tau_matrix(q: QuadraticForm, q2: QuadraticForm, skew: Sequence[Sequence]) -> List[Vector]:
    _check_pair(q, q2)
    minv = inverse(q.mat())
    a = matmul(q2.mat(), minv)
    b = matmul(minv, q2.mat())
    return matadd(matmul(skew, a), matmul(b, skew), -1)


def tau(q: QuadraticForm, q2: QuadraticForm, skew) -> QuadraticForm:
    """Image of one skew operator; ``skew`` is a pair ``(i, j)`` or a skew matrix."""
    n = q.n
    if isinstance(skew, tuple) and len(skew) == 2 and isinstance(skew[0], int):
        skew = skew_basis(n, *skew)
    return QuadraticForm.from_matrix(Ring.x(n), tau_matrix(q, q2, skew))


def tau_image(q: QuadraticForm, q2: QuadraticForm) -> Subspace:
    _check_pair(q, q2)
    n = q.n
    minv = inverse(q.mat())
    a = matmul(q2.mat(), minv)
    b = matmul(minv, q2.mat())
    s = Ring.x(n)
    forms = []
    for i, j in combinations(range(n), 2):
        w = skew_basis(n, i, j)
        forms.append(QuadraticForm.from_matrix(s, matadd(matmul(w, a), matmul(b, w), -1)).poly)
    return Subspace(s, forms, 2)


def vanishes_at(q: QuadraticForm, q2: QuadraticForm, v: Sequence) -> bool:
    """Whether every form in the image vanishes at ``v``."""
    v = [Fraction(c) for c in v]
    return all(g.evaluate(v) == 0 for g in tau_image(q, q2).basis)


def is_eigenvector(q: QuadraticForm, q2: QuadraticForm, v: Sequence) -> bool:
    v = [Fraction(c) for c in v]
    w = matvec(matmul(q2.mat(), inverse(q.mat())), v)
    return rank([v, w]) <= 1


# -- the pencil ----------------------------------------------------------------

def _pencil(q: QuadraticForm, q2: QuadraticForm, lam: Fraction) -> List[Vector]:
    return matadd(q2.mat(), q.mat(), lam)


def _minor_polys(q: QuadraticForm, q2: QuadraticForm, size: int) -> List[upoly.UPoly]:
    n = q.n
    out = []
    cache = {}

    def pencil_at(lam):
        if lam not in cache:
            cache[lam] = _pencil(q, q2, lam)
        return cache[lam]

    for rows in combinations(range(n), size):
        for cols in combinations(range(n), size):
            out.append(upoly.interpolate(
                lambda lam: det([[pencil_at(lam)[r][c] for c in cols] for r in rows]), size))
    return out


@dataclass(frozen=True)
class PencilProfile:
    determinant: Tuple[Fraction, ...]
    minor_gcd: Tuple[Fraction, ...]
    max_corank: int
    unique: bool

    def as_dict(self) -> dict:
        return {
            "determinant": upoly.to_str(self.determinant, "t"),
            "minor_gcd": upoly.to_str(self.minor_gcd, "t"),
            "max_corank": self.max_corank,
            "unique": self.unique,
        }


def pencil_profile(q: QuadraticForm, q2: QuadraticForm) -> PencilProfile:
    """Determinant of ``q2 + t q`` and the largest corank reached over the pencil.

    A common apolar scheme is unique exactly when no member has corank two
    or more, i.e. when the ``(n-1)``-minors have no common root.
    """
    _check_pair(q, q2)
    n = q.n
    detp = upoly.interpolate(lambda lam: det(_pencil(q, q2, lam)), n)
    minor_gcd = upoly.gcd_all(_minor_polys(q, q2, n - 1))
    max_corank = 1 if upoly.degree(detp) >= 1 else 0
    g = minor_gcd
    while upoly.degree(g) >= 1:
        max_corank += 1
        if max_corank == n:
            break
        g = upoly.gcd_all(_minor_polys(q, q2, n - max_corank))
    unique = upoly.degree(minor_gcd) == 0
    return PencilProfile(tuple(detp), tuple(minor_gcd), max_corank, unique)


# -- common apolar simplex -----------------------------------------------------

@dataclass(frozen=True)
class Eigensimplex:
    kind: str  # "points" or "ideal"
    ideal: Subspace
    points: Tuple[Tuple[Fraction, ...], ...] = ()
    eigenvalues: Tuple[Fraction, ...] = ()


def eigensimplex(q: QuadraticForm, q2: QuadraticForm) -> Eigensimplex:
    """Common apolar scheme of the pencil.

    When ``M2 M^-1`` has ``n`` distinct rational eigenvalues the scheme is the
    set of its eigenvectors; otherwise only its ideal is returned.
    """
    _check_pair(q, q2)
    n = q.n
    detp = upoly.interpolate(lambda lam: det(matadd(q2.mat(), q.mat(), -lam)), n)
    roots = upoly.rational_roots(detp)
    if len(roots) == n and all(m == 1 for m in roots.values()):
        lams = sorted(roots)
        m = q.mat()
        pts = []
        for lam in lams:
            ker = kernel(matadd(q2.mat(), m, -lam), n)
            w = ker[0]
            v = matvec(m, w)
            lead = next(c for c in v if c)
            pts.append(tuple(c / lead for c in v))
        return Eigensimplex("points", ideal_of_points(pts), tuple(pts), tuple(lams))
    return Eigensimplex("ideal", tau_image(q, q2))


# -- curvilinear schemes -------------------------------------------------------

def curvilinear_scheme(lengths: Sequence[int]) -> Tuple[Subspace, QuadraticForm, QuadraticForm]:
    """Disjoint curvilinear schemes of the given lengths in coordinate blocks.

    Block ``i`` sits on the coordinates of a span of dimension ``n_i`` and is
    cut out there by the 2x2 minors of ``[[x1..xk], [x2..xk, 0]]``; products of
    coordinates from different blocks vanish.  Returns the quadratic part of
    the ideal, the apolar quadric ``sum_k y_k y_(n_i+1-k)`` summed over blocks,
    and a second quadric whose pencil with the first has this scheme as its
    unique common apolar scheme.
    """
    n = sum(lengths)
    s = Ring.x(n)
    t = Ring.y(n)
    gens = []
    offsets = []
    start = 0
    for k in lengths:
        offsets.append(start)
        start += k
    for off, k in zip(offsets, lengths):
        top = [s.var(off + a) for a in range(k)]
        bottom = [s.var(off + a + 1) for a in range(k - 1)] + [s.zero()]
        for a, b in combinations(range(k), 2):
            g = top[a] * bottom[b] - top[b] * bottom[a]
            if g:
                gens.append(g)
    for (o1, k1), (o2, k2) in combinations(list(zip(offsets, lengths)), 2):
        for a in range(k1):
            for b in range(k2):
                gens.append(s.var(o1 + a) * s.var(o2 + b))
    quad = t.zero()
    shifted = t.zero()
    for idx, (off, k) in enumerate(zip(offsets, lengths)):
        block = t.zero()
        for a in range(k):
            block = block + t.var(off + a) * t.var(off + k - 1 - a)
        for a in range(k - 1):
            shifted = shifted + t.var(off + a) * t.var(off + k - 2 - a)
        quad = quad + block
        shifted = shifted + block * (idx + 1)
    return Subspace(s, gens, 2), QuadraticForm.from_poly(quad), QuadraticForm.from_poly(shifted)
