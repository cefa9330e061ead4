"""Brute-force point counts and Jacobian ranks over small prime fields.

Points of ``F_p^v`` are enumerated in blocks: the leading variables are fixed
per block and the trailing ones are swept as numpy arrays.  Each equation
only sees the points that survived the previous ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DivisionByZero, NotOnVariety, OutOfRange, TooLarge, Unsupported
from .linalg import fraction_mod_p, rank, rank_mod_p, rref
from .poly import Polynomial, Ring
from .threads import ordered_map

PRIMES = (3, 5, 7)
MAX_POINTS = 10 ** 8
BLOCK = 1 << 20


@dataclass(frozen=True)
class AffineSystem:
    """Polynomials in ``nvars`` variables read modulo ``p``.

    Terms are stored as ``(coefficient mod p, exponent vector)``; a generator
    whose denominators vanish mod ``p`` is rejected.
    """

    p: int
    nvars: int
    equations: Tuple[Tuple[Tuple[int, Tuple[int, ...]], ...], ...]

    @staticmethod
    def from_polys(polys: Sequence[Polynomial], p: int, nvars: int | None = None) -> "AffineSystem":
        if p not in PRIMES:
            raise Unsupported(f"prime must be one of {PRIMES}")
        if nvars is None:
            nvars = polys[0].ring.nvars if polys else 0
        eqs = []
        for f in polys:
            if f.ring.nvars != nvars:
                raise OutOfRange("all equations must use the same variables")
            terms = []
            for e, c in f.sorted_terms():
                try:
                    v = fraction_mod_p(c, p)
                except DivisionByZero as exc:
                    raise Unsupported(f"coefficient {c} has no reduction mod {p}") from exc
                if v:
                    terms.append((v, tuple(e)))
            eqs.append(tuple(terms))
        return AffineSystem(p, nvars, tuple(eqs))

    def evaluate(self, point: Sequence[int]) -> List[int]:
        out = []
        for eq in self.equations:
            total = 0
            for c, e in eq:
                t = c
                for x, a in zip(point, e):
                    if a:
                        t = t * pow(int(x), a, self.p) % self.p
                total += t
            out.append(total % self.p)
        return out


def _eval_block(eq, columns: List, p: int, size: int) -> np.ndarray:
    total = np.zeros(size, dtype=np.int64)
    for c, e in eq:
        term = np.full(size, c, dtype=np.int64)
        for i, a in enumerate(e):
            if a:
                col = columns[i]
                term = term * (col if a == 1 else np.mod(col ** a, p)) % p
        total = (total + term) % p
    return total


def _count_block(system: AffineSystem, head: Tuple[int, ...], tail_grid: np.ndarray) -> int:
    p = system.p
    size = tail_grid.shape[1]
    columns = [np.full(size, v, dtype=np.int64) for v in head] + [tail_grid[i] for i in range(tail_grid.shape[0])]
    alive = np.arange(size)
    for eq in system.equations:
        if not eq:
            continue
        cols = [c[alive] for c in columns]
        values = _eval_block(eq, cols, p, len(alive))
        alive = alive[values == 0]
        if len(alive) == 0:
            return 0
    return int(len(alive))


def _tail_grid(p: int, k: int) -> np.ndarray:
    if k == 0:
        return np.zeros((0, 1), dtype=np.int64)
    grids = np.indices((p,) * k, dtype=np.int64)
    return grids.reshape(k, -1)


def count_points(system: AffineSystem, threads: int | None = None) -> int:
    """Number of common zeros in ``F_p^v``."""
    p, v = system.p, system.nvars
    if p ** v > MAX_POINTS:
        raise TooLarge(f"{p}^{v} points exceed the enumeration bound {MAX_POINTS}")
    tail = 0
    while tail < v and p ** (tail + 1) <= BLOCK:
        tail += 1
    grid = _tail_grid(p, tail)
    heads = list(product(range(p), repeat=v - tail))
    return sum(ordered_map(lambda h: _count_block(system, h, grid), heads, threads))


def solutions(system: AffineSystem, limit: int | None = None) -> List[Tuple[int, ...]]:
    """Common zeros in lexicographic order (at most ``limit`` of them)."""
    p, v = system.p, system.nvars
    if p ** v > MAX_POINTS:
        raise TooLarge(f"{p}^{v} points exceed the enumeration bound {MAX_POINTS}")
    tail = 0
    while tail < v and p ** (tail + 1) <= BLOCK:
        tail += 1
    grid = _tail_grid(p, tail)
    out: List[Tuple[int, ...]] = []
    for head in product(range(p), repeat=v - tail):
        size = grid.shape[1]
        columns = [np.full(size, x, dtype=np.int64) for x in head] + [grid[i] for i in range(tail)]
        alive = np.arange(size)
        for eq in system.equations:
            if not eq:
                continue
            values = _eval_block(eq, [c[alive] for c in columns], p, len(alive))
            alive = alive[values == 0]
        for idx in alive:
            out.append(tuple(int(c[idx]) for c in columns))
            if limit is not None and len(out) >= limit:
                return out
    return out


def jacobian_matrix(polys: Sequence[Polynomial], point: Sequence) -> List[List[Fraction]]:
    nv = polys[0].ring.nvars
    return [[f.diff(i).evaluate(list(point)) for i in range(nv)] for f in polys]


def jacobian_rank(polys: Sequence[Polynomial], point: Sequence, p: int | None = None) -> int:
    """Rank of the Jacobian at a point of the variety, over Q or modulo ``p``."""
    if not polys:
        return 0
    if p is None:
        pt = [Fraction(x) for x in point]
        if any(f.evaluate(pt) for f in polys):
            raise NotOnVariety("point does not satisfy the equations")
        return rank(jacobian_matrix(polys, pt))
    system = AffineSystem.from_polys(polys, p)
    if any(system.evaluate(point)):
        raise NotOnVariety(f"point does not satisfy the equations mod {p}")
    rows = []
    for f in polys:
        row = []
        for i in range(f.ring.nvars):
            d = AffineSystem.from_polys([f.diff(i)], p, f.ring.nvars) if f.diff(i) else None
            row.append(d.evaluate(point)[0] if d else 0)
        rows.append(row)
    return rank_mod_p(rows, p)


def _linear_elimination(polys: Sequence[Polynomial]):
    """Split off the linear equations and solve them for their pivot variables.

    Returns the free variable indices and, for each variable, its value as a
    rational linear combination of the free ones.
    """
    ring = polys[0].ring
    nv = ring.nvars
    linear = [f for f in polys if f.degree() == 1 and f.is_homogeneous()]
    rows = [[f.coeff(tuple(int(j == i) for j in range(nv))) for i in range(nv)] for f in linear]
    red, pivots = rref(rows) if rows else ([], [])
    free = [i for i in range(nv) if i not in pivots]
    images = {}
    for row, piv in zip(red, pivots):
        images[piv] = {f: -row[f] for f in free if row[f]}
    for f in free:
        images[f] = {f: Fraction(1)}
    return free, images


def curvilinear_local_samples(p: int = 7, count: int = 10) -> List[dict]:
    """Points of the length-5 local stratum over ``F_p`` on its curvilinear part.

    The linear trace equations are solved first and the remaining quadrics
    are enumerated over the free variables.  A point is kept when some
    element ``x`` of the maximal ideal has ``x^4 != 0`` (so the algebra is
    ``F_p[t]/(t^5)``); the Jacobian rank of the local equations is recorded.
    """
    from .chart import loc_equations, sec_mult_matrices, sec_ring

    n = 5
    eqs = loc_equations(n)
    ring = sec_ring(n)
    free, images = _linear_elimination(eqs)
    small = Ring(tuple(ring.names[i] for i in free))
    pos = {f: k for k, f in enumerate(free)}
    substitution = [None] * ring.nvars
    for v, combo in images.items():
        substitution[v] = sum((small.var(pos[f]) * c for f, c in combo.items()), small.zero())
    reduced = [f.substitute(substitution, small) for f in eqs if f.degree() > 1]
    system = AffineSystem.from_polys(reduced, p, small.nvars)
    mats = sec_mult_matrices(n)
    out = []
    for sol in solutions(system):
        full = [sum((fraction_mod_p(c, p) * sol[pos[f]] for f, c in images[v].items()), 0) % p
                for v in range(ring.nvars)]
        if not _is_curvilinear(mats, full, p):
            continue
        out.append({"point": full, "rank": jacobian_rank(eqs, full, p)})
        if len(out) >= count:
            break
    return out


def _is_curvilinear(mats, point, p: int) -> bool:
    size = len(mats[0])
    numeric = []
    for m in mats:
        numeric.append(np.array([[_eval_mod(m[r][c], point, p) for c in range(size)] for r in range(size)], dtype=np.int64))
    for t in product(range(p), repeat=len(mats) - 1):
        lx = sum((numeric[k + 1] * t[k] for k in range(len(t))), np.zeros((size, size), dtype=np.int64)) % p
        x = np.zeros(size, dtype=np.int64)
        x[1:] = t
        v = x
        for _ in range(size - 1):
            v = lx.dot(v) % p
        if v.any():
            return True
    return False


def _eval_mod(f: Polynomial, point, p: int) -> int:
    if not f:
        return 0
    return AffineSystem.from_polys([f], p, f.ring.nvars).evaluate(point)[0]
