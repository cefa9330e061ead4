"""Graded Betti numbers of quotients by quadrics through Koszul homology.

For ``A = S / I`` with ``V = S_1`` the Betti number ``beta_{i,j}`` is the
dimension of the homology of

    wedge^(i+1) V (x) A_(j-i-1)  ->  wedge^i V (x) A_(j-i)  ->  wedge^(i-1) V (x) A_(j-i+1)

at the middle term.  Each graded piece ``A_d`` is ``S_d`` modulo the span of
the generators times monomials, with the standard monomials as basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Sequence, Tuple

from .errors import NonIntegral, OutOfRange, TooLarge
from .ideals import ideal_piece
from .linalg import rank
from .poly import Polynomial, Ring, monomial
from .subspace import Subspace

MAX_DEGREE = 7


class GradedQuotient:
    """``S / (gens)`` for homogeneous ``gens``; graded pieces are built lazily and cached."""

    def __init__(self, ring: Ring, gens: Sequence[Polynomial]):
        self.ring = ring
        self.gens = [g for g in gens if g]
        self._pieces: Dict[int, Subspace] = {}
        self._bases: Dict[int, List[tuple]] = {}

    def ideal(self, d: int) -> Subspace:
        if d > MAX_DEGREE:
            raise TooLarge(f"degree {d} exceeds the working bound {MAX_DEGREE}")
        if d not in self._pieces:
            self._pieces[d] = ideal_piece(self.gens, self.ring, d)
        return self._pieces[d]

    def basis(self, d: int) -> List[tuple]:
        """Standard monomials of degree ``d``: those that are not pivots of the ideal piece."""
        if d < 0:
            return []
        if d not in self._bases:
            piece = self.ideal(d)
            leads = {b.leading_term()[0] for b in piece.basis}
            self._bases[d] = [e for e in self.ring.monomials(d) if e not in leads]
        return self._bases[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def coordinates(self, f: Polynomial, d: int) -> List[Fraction]:
        """Coordinates of the class of a degree ``d`` form on the standard monomials."""
        r = self.ideal(d).reduce(f)
        return [Fraction(r.coeff(e)) for e in self.basis(d)]

    def times_variable(self, k: int, d: int) -> List[List[Fraction]]:
        """Matrix of multiplication by ``x_k`` from ``A_d`` to ``A_(d+1)`` (columns are images)."""
        x = self.ring.var(k)
        cols = [self.coordinates(monomial(self.ring, e) * x, d + 1) for e in self.basis(d)]
        return cols


def hilbert_function(quot: GradedQuotient, dmax: int) -> List[int]:
    if dmax > MAX_DEGREE:
        raise TooLarge(f"degree {dmax} exceeds the working bound {MAX_DEGREE}")
    return [quot.dim(d) for d in range(dmax + 1)]


@dataclass
class BettiTable:
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def nonzero(self) -> Dict[Tuple[int, int], int]:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def render(self) -> str:
        """Rows are ``j - i``, columns are ``i`` (the usual layout of a Betti table)."""
        if not self.entries:
            return ""
        steps = max(i for i, _ in self.entries) + 1
        shifts = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = ["     " + "".join(str(i).rjust(width) for i in range(steps))]
        for s in shifts:
            row = []
            for i in range(steps):
                v = self.entries.get((i, i + s))
                row.append(("-" if not v else str(v)).rjust(width))
            lines.append(f"{s:>3}: " + "".join(row))
        return "\n".join(lines)


def _differential(quot: GradedQuotient, i: int, j: int) -> Tuple[List[List[Fraction]], int, int]:
    """Matrix of ``wedge^i V (x) A_(j-i) -> wedge^(i-1) V (x) A_(j-i+1)``."""
    n = quot.ring.nvars
    d = j - i
    src_sets = list(combinations(range(n), i))
    dst_sets = list(combinations(range(n), i - 1)) if i >= 1 else []
    src_dim = len(src_sets) * quot.dim(d) if d >= 0 else 0
    dst_dim = len(dst_sets) * quot.dim(d + 1) if d + 1 >= 0 and i >= 1 else 0
    if src_dim == 0 or dst_dim == 0:
        return [], src_dim, dst_dim
    bd = quot.dim(d)
    bd1 = quot.dim(d + 1)
    mult = {k: quot.times_variable(k, d) for k in range(n)}
    dst_index = {s: t for t, s in enumerate(dst_sets)}
    rows = [[Fraction(0)] * src_dim for _ in range(dst_dim)]
    for si, s in enumerate(src_sets):
        for pos, k in enumerate(s):
            sign = -1 if pos % 2 else 1
            rest = s[:pos] + s[pos + 1:]
            ti = dst_index[rest]
            for a in range(bd):
                col = mult[k][a]
                for b, c in enumerate(col):
                    if c:
                        rows[ti * bd1 + b][si * bd + a] += sign * c
    return rows, src_dim, dst_dim


def betti_number(quot: GradedQuotient, i: int, j: int) -> int:
    n = quot.ring.nvars
    if i < 0 or i > n:
        return 0
    out_map, dim_mid, _ = _differential(quot, i, j)
    if dim_mid == 0:
        return 0
    in_map, _, _ = _differential(quot, i + 1, j) if i + 1 <= n else ([], 0, 0)
    kernel_dim = dim_mid - (rank(out_map) if out_map else 0)
    image_dim = rank(in_map) if in_map else 0
    return kernel_dim - image_dim


def betti_numbers(quot: GradedQuotient, steps: int, max_shift: int = 2) -> BettiTable:
    """``beta_{i,i+s}`` for ``0 <= i <= steps`` and ``0 <= s <= max_shift``."""
    n = quot.ring.nvars
    if steps > n:
        raise OutOfRange(f"at most {n} steps for {n} variables")
    if max_shift + 1 > MAX_DEGREE:
        raise TooLarge("shift exceeds the working bound")
    table = BettiTable()
    for i in range(steps + 1):
        for s in range(max_shift + 1):
            table.entries[(i, i + s)] = betti_number(quot, i, i + s)
    return table


def expected_betti(kind: str, n: int, k: int) -> int:
    """Closed forms for ``beta_{k,k+1}``: apolar algebra of a full-rank quadric, or ``n`` general points."""
    if not 1 <= k <= n - 1:
        raise OutOfRange("k must lie in 1..n-1")
    if kind == "aq":
        num = k * (n - k) * comb(n + 2, k + 1)
        if num % (n + 1):
            raise NonIntegral("non-integral Betti number")
        return num // (n + 1)
    if kind == "points":
        return k * comb(n, k + 1)
    raise OutOfRange(f"unknown kind {kind!r}")


def expected_table(kind: str, n: int) -> Dict[Tuple[int, int], int]:
    """All nonzero entries of the expected table (including ``beta_{0,0}``)."""
    out = {(0, 0): 1}
    for k in range(1, n):
        out[(k, k + 1)] = expected_betti(kind, n, k)
    if kind == "aq":
        out[(n, n + 2)] = 1
    return out
