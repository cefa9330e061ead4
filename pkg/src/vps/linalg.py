"""Exact linear algebra over the rationals (and, where noted, over F_p).

Dense matrices are lists of rows.  Rank, determinant and reduced row echelon
form go through a fraction-free (Bareiss) elimination on integer-scaled rows,
so no intermediate fractions are created until the final normalisation.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Dict, Hashable, List, Sequence, Tuple

from .errors import DegenerateForm, DivisionByZero, WrongDimension

Matrix = List[List[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def matadd(a, b, scale=1) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mul(c, a) -> Matrix:
    return [[c * x for x in row] for row in a]


def is_symmetric(m) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def _integer_rows(m: Sequence[Sequence]) -> List[List[int]]:
    rows = []
    for row in m:
        row = [Fraction(v) for v in row]
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        rows.append([int(v * den) for v in row])
    return rows


def bareiss_echelon(rows: List[List[int]]) -> Tuple[List[int], int]:
    """Fraction-free forward elimination in place.

    Returns the pivot columns and the sign of the row permutation.  Every
    entry stays an integer minor of the input, so each division is exact.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: List[int] = []
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - a * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, sign


def rank(m: Sequence[Sequence]) -> int:
    if not m or not m[0]:
        return 0
    rows = _integer_rows(m)
    pivots, _ = bareiss_echelon(rows)
    return len(pivots)


def det(m: Sequence[Sequence]) -> Fraction:
    n = len(m)
    if any(len(row) != n for row in m):
        raise WrongDimension("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in m:
        row = [Fraction(v) for v in row]
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        scale *= den
        rows.append([int(v * den) for v in row])
    pivots, sign = bareiss_echelon(rows)
    if len(pivots) < n:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def rref(m: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if not m or not m[0]:
        return [], []
    rows = _integer_rows(m)
    pivots, _ = bareiss_echelon(rows)
    out = [[Fraction(v) for v in rows[i]] for i in range(len(pivots))]
    for i, c in enumerate(pivots):
        piv = out[i][c]
        out[i] = [v / piv for v in out[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            f = out[k][c]
            if f:
                out[k] = [a - f * b for a, b in zip(out[k], out[i])]
    return out, pivots


def kernel(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of the right kernel, one vector per free column."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return identity(ncols)
    r, pivots = rref(m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -r[i][f]
        basis.append(v)
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> list | None:
    """One solution of ``m x = b`` or ``None`` when inconsistent."""
    ncols = len(m[0]) if m else 0
    aug = [list(row) + [bv] for row, bv in zip(m, b)]
    r, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = r[i][ncols]
    return x


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise DegenerateForm("matrix is singular")
    return [row[n:] for row in r]


def congruence_diagonalize(m: Sequence[Sequence]) -> Tuple[Matrix, list]:
    """Find invertible ``P`` and diagonal ``d`` with ``P^T m P = diag(d)``."""
    n = len(m)
    a = to_matrix(m)
    p = identity(n)

    def add_col_row(src: int, dst: int, f):
        # column/row operation e_dst <- e_dst + f e_src, applied congruently
        for i in range(n):
            a[i][dst] += f * a[i][src]
        for j in range(n):
            a[dst][j] += f * a[src][j]
        for i in range(n):
            p[i][dst] += f * p[i][src]

    def swap(i: int, j: int):
        for row in a:
            row[i], row[j] = row[j], row[i]
        a[i], a[j] = a[j], a[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                add_col_row(j, k, Fraction(1))
        piv = a[k][k]
        for j in range(k + 1, n):
            if a[k][j]:
                add_col_row(k, j, -a[k][j] / piv)
    return p, [a[i][i] for i in range(n)]


# -- prime field --------------------------------------------------------------

def rank_mod_p(m: Sequence[Sequence[int]], p: int) -> int:
    rows = [[int(v) % p for v in row] for row in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def fraction_mod_p(v, p: int) -> int:
    v = Fraction(v)
    den = v.denominator % p
    if den == 0:
        raise DivisionByZero(f"denominator {v.denominator} vanishes mod {p}")
    return v.numerator * pow(den, -1, p) % p


# -- sparse incremental echelon ----------------------------------------------

class Echelon:
    """Sparse reduced echelon basis of a growing span of vectors.

    Vectors are dicts from hashable column labels to ``Fraction``; ``key``
    orders labels, the largest label of a vector being its pivot.
    """

    def __init__(self, key: Callable[[Hashable], object]):
        self.key = key
        self.rows: Dict[Hashable, Dict[Hashable, Fraction]] = {}

    def __len__(self):
        return len(self.rows)

    def _lead(self, vec):
        return max(vec, key=self.key)

    def reduce(self, vec: Dict[Hashable, Fraction]) -> Dict[Hashable, Fraction]:
        """Fully reduce ``vec`` against the current basis."""
        vec = {k: v for k, v in vec.items() if v}
        rows = self.rows
        # basis rows vanish on every other pivot column, one pass suffices
        for c in [c for c in vec if c in rows]:
            f = vec.get(c)
            if not f:
                continue
            for k, v in rows[c].items():
                nv = vec.get(k, 0) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec: Dict[Hashable, Fraction]) -> bool:
        """Insert; returns ``True`` when the span grew."""
        red = self.reduce(vec)
        if not red:
            return False
        lead = self._lead(red)
        inv = 1 / red[lead]
        red = {k: v * inv for k, v in red.items()}
        for c, row in self.rows.items():
            f = row.get(lead)
            if f:
                for k, v in red.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[lead] = red
        return True

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def sorted_rows(self) -> list:
        return [self.rows[c] for c in sorted(self.rows, key=self.key, reverse=True)]
