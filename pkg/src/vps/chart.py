"""Affine chart of length-``n`` schemes apolar to the standard quadric.

Near the scheme whose ideal is generated by ``x1^2, x1 x_j, x_i x_j`` and
``x_i^2 - x1 xn`` (``2 <= i < j <= n-1``), every scheme apolar to
``q = 2 y1 yn + y2^2 + ... + y(n-1)^2`` that avoids ``{xn = 0}`` has an ideal with
generators

    f_ij = x_i x_j - [i = j >= 2] x1 xn - sum_{k=2..n} a(ij,k) x_k xn

for ``1 <= i <= j <= n-1`` (``x_n xn`` meaning ``xn^2``).  The parameters
``a(ij,k)`` are the chart coordinates; their name is ``a{i}{j}_{k}``.

Modulo linear relations the parameters collapse to variables ``a_I`` indexed
by unordered triples (``11k``, ``1jk``, ``ijk`` with middle indices in
``2..n-1``); those are named ``a{I}`` with the digits sorted.  The equations
of the chart are quadratic in them and homogeneous for the weights
``w(a(ij,k)) = w_i + w_j - w_k - 1`` with ``w_1 = 3``, ``w_n = 1`` and ``w = 2``
for the middle indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .algebra import AlgebraTable
from .apolarity import is_apolar, standard_quadric
from .errors import NotApolar, NotInChart, OutOfRange, Unsupported, WrongDimension, ZeroVector
from .linalg import Echelon
from .poly import Polynomial, Ring, render
from .scalars import fraction_str
from .subspace import Subspace

Param = Tuple[int, int, int]

MAX_N = 9


def _check_n(n: int):
    if not 3 <= n <= MAX_N:
        raise OutOfRange(f"chart computations need 3 <= n <= {MAX_N}, got {n}")


def pair_order(n: int) -> List[Tuple[int, int]]:
    """Pairs ``i <= j <= n-1`` in the grevlex order of the monomials ``x_i x_j``."""
    return [(i, j) for j in range(1, n) for i in range(1, j + 1)]


def chart_params(n: int) -> List[Param]:
    """Indices ``(i, j, k)`` with ``i <= j <= n-1`` and ``2 <= k <= n``, lexicographic."""
    return [(i, j, k) for i in range(1, n) for j in range(i, n) for k in range(2, n + 1)]


def param_name(i: int, j: int, k: int) -> str:
    i, j = min(i, j), max(i, j)
    return f"a{i}{j}_{k}"


def sym_key(indices: Iterable[int], n: int) -> Tuple[int, int, int]:
    """Canonical triple of a symmetric variable (sorted, ``n`` only as ``11n``)."""
    t = tuple(sorted(indices))
    return t


def sym_name(t: Sequence[int]) -> str:
    return "a" + "".join(str(v) for v in sorted(t))


def sym_triples(n: int) -> List[Tuple[int, int, int]]:
    mids = range(2, n)
    out = [(1, 1, k) for k in range(2, n + 1)]
    out += [(1, j, k) for j in mids for k in mids if j <= k]
    out += [(i, j, k) for i in mids for j in mids for k in mids if i <= j <= k]
    return out


def representative(i: int, j: int, k: int, n: int) -> Tuple[int, int, int]:
    """Symmetric variable equal to ``a(ij,k)`` modulo the linear relations."""
    i, j = min(i, j), max(i, j)
    if i == 1 and j == 1:
        return (1, 1, k)
    if i == 1:
        if k == n:
            return (1, 1, j)
        return (1,) + tuple(sorted((j, k)))
    if k == n:
        return (1, i, j)
    return tuple(sorted((i, j, k)))


def x_weights(n: int) -> List[int]:
    return [3] + [2] * (n - 2) + [1]


def _w(idx: int, n: int) -> int:
    return 3 if idx == 1 else (1 if idx == n else 2)


def param_weight(i: int, j: int, k: int, n: int) -> int:
    return _w(i, n) + _w(j, n) - _w(k, n) - 1


def sym_weight(t: Sequence[int], n: int) -> int:
    t = tuple(sorted(t))
    if t[:2] == (1, 1):
        return 4 if t[2] == n else 3
    if t[0] == 1:
        return 2
    return 1


# -- points of the chart --------------------------------------------------------

@dataclass(frozen=True)
class ChartPoint:
    n: int
    values: Tuple[Fraction, ...]  # aligned with chart_params(n)

    @staticmethod
    def from_mapping(n: int, data: Mapping[Param, object]) -> "ChartPoint":
        vals = []
        for (i, j, k) in chart_params(n):
            v = data.get((i, j, k), data.get((j, i, k), 0))
            vals.append(Fraction(v))
        return ChartPoint(n, tuple(vals))

    @staticmethod
    def zero(n: int) -> "ChartPoint":
        return ChartPoint(n, tuple(Fraction(0) for _ in chart_params(n)))

    def __getitem__(self, key: Param) -> Fraction:
        i, j, k = key
        i, j = min(i, j), max(i, j)
        return self.values[_param_index(self.n)[(i, j, k)]]

    def as_dict(self) -> Dict[Param, Fraction]:
        return dict(zip(chart_params(self.n), self.values))

    def replace(self, key: Param, value) -> "ChartPoint":
        i, j, k = key
        idx = _param_index(self.n)[(min(i, j), max(i, j), k)]
        vals = list(self.values)
        vals[idx] = Fraction(value)
        return ChartPoint(self.n, tuple(vals))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "values": {param_name(*p): fraction_str(v) for p, v in zip(chart_params(self.n), self.values)}})

    @staticmethod
    def from_json(text: str) -> "ChartPoint":
        data = json.loads(text)
        n = int(data["n"])
        lookup = {param_name(*p): p for p in chart_params(n)}
        vals = {}
        for name, v in data["values"].items():
            if name not in lookup:
                raise WrongDimension(f"unknown chart parameter {name}")
            vals[lookup[name]] = Fraction(v)
        return ChartPoint.from_mapping(n, vals)

    def symmetric_values(self) -> Dict[Tuple[int, int, int], Fraction]:
        """Values of the symmetric variables read off through their defining parameter."""
        n = self.n
        out = {}
        for t in sym_triples(n):
            if t[:2] == (1, 1):
                out[t] = self[(1, 1, t[2])]
            elif t[0] == 1:
                out[t] = self[(1, t[1], t[2])]
            else:
                out[t] = self[(t[0], t[1], t[2])]
        return out


@lru_cache(maxsize=None)
def _param_index(n: int) -> Dict[Param, int]:
    return {p: idx for idx, p in enumerate(chart_params(n))}


def chart_generators(a: ChartPoint) -> Dict[Tuple[int, int], Polynomial]:
    n = a.n
    s = Ring.x(n)
    x = s.gens()
    xn = x[n - 1]
    out = {}
    for (i, j) in pair_order(n):
        f = x[i - 1] * x[j - 1]
        if i == j and i >= 2:
            f = f - x[0] * xn
        for k in range(2, n + 1):
            c = a[(i, j, k)]
            if c:
                f = f - x[k - 1] * xn * c
        out[(i, j)] = f
    return out


def chart_ideal(a: ChartPoint) -> Subspace:
    return Subspace(Ring.x(a.n), list(chart_generators(a).values()), 2)


def chart_basis(n: int) -> List[Polynomial]:
    """Basis of the apolar space of the standard quadric matching the chart's coefficient matrix."""
    s = Ring.x(n)
    x = s.gens()
    out = []
    for (i, j) in pair_order(n):
        f = x[i - 1] * x[j - 1]
        if i == j and i >= 2:
            f = f - x[0] * x[n - 1]
        out.append(f)
    for k in range(2, n + 1):
        out.append(x[k - 1] * x[n - 1])
    return out


def normal_form(ideal: Subspace) -> ChartPoint:
    """Chart coordinates of a scheme given by the quadratic part of its ideal."""
    n = ideal.ring.nvars
    _check_n(n)
    if ideal.ring != Ring.x(n):
        raise WrongDimension("ideal must live in x1..xn")
    if ideal.dim != comb(n, 2):
        raise WrongDimension(f"ideal has dimension {ideal.dim}, expected {comb(n, 2)}")
    q = standard_quadric(n)
    if not is_apolar(ideal.basis, q):
        raise NotApolar("ideal is not apolar to the standard quadric")
    leads = {}
    for b in ideal.basis:
        e = b.leading_term()[0]
        if e[n - 1]:
            raise NotInChart("scheme meets the hyperplane xn = 0")
        idx = [i + 1 for i, a in enumerate(e) for _ in range(a)]
        leads[tuple(idx)] = b
    values = {}
    for (i, j) in pair_order(n):
        b = leads.get((i, j))
        if b is None:
            raise NotInChart(f"no generator with leading term x{i}*x{j}")
        for k in range(2, n + 1):
            e = [0] * n
            e[k - 1] += 1
            e[n - 1] += 1
            values[(i, j, k)] = -b.coeff(tuple(e))
    return ChartPoint.from_mapping(n, values)


def mult_table(a: ChartPoint) -> AlgebraTable:
    """Algebra of the scheme on ``xn = 1`` with basis ``x1, ..., x(n-1), 1``."""
    n = a.n
    dim = n
    unit = n - 1

    def vec(entries: Dict[int, Fraction]):
        v = [Fraction(0)] * dim
        for k, c in entries.items():
            v[k] += c
        return tuple(v)

    mult = []
    for r in range(dim):
        row = []
        for c in range(dim):
            if r == unit:
                row.append(vec({c: Fraction(1)}))
            elif c == unit:
                row.append(vec({r: Fraction(1)}))
            else:
                i, j = r + 1, c + 1
                entries: Dict[int, Fraction] = {}
                if i == j and i >= 2:
                    entries[0] = Fraction(1)
                for k in range(2, n):
                    entries[k - 1] = entries.get(k - 1, Fraction(0)) + a[(i, j, k)]
                entries[unit] = a[(i, j, n)]
                row.append(vec(entries))
        mult.append(tuple(row))
    names = tuple(f"x{i}" for i in range(1, n)) + ("1",)
    return AlgebraTable(names, unit, tuple(mult))


def socle_psi(n: int) -> List[Fraction]:
    """Twice the coefficient of ``x1``; recovers the standard quadric from a chart algebra."""
    psi = [Fraction(0)] * n
    psi[0] = Fraction(2)
    return psi


# -- the equations ----------------------------------------------------------------

class ChartSystem:
    """Equations of the chart for one ``n``.

    ``linear_relations`` and ``pair_generators`` are polynomials in the chart
    parameters; ``generators`` are the symmetrised equations in the ring of
    the variables ``a_I``.  Both generator lists are written as differences of
    products of two parameters plus at most one linear term.
    """

    def __init__(self, n: int):
        _check_n(n)
        self.n = n
        self.params = chart_params(n)
        self.param_ring = Ring(tuple(param_name(*p) for p in self.params))
        self.triples = sym_triples(n)
        self.sym_ring = Ring(tuple(sym_name(t) for t in self.triples))
        self._pidx = {p: i for i, p in enumerate(self.params)}
        self._sidx = {t: i for i, t in enumerate(self.triples)}
        self.param_weights = [param_weight(i, j, k, n) for (i, j, k) in self.params]
        self.sym_weights = [sym_weight(t, n) for t in self.triples]
        self.linear_relations = self._linear_relations()
        self.pair_generators = self._pair_generators()
        self.generators = self._sym_generators()

    # variables
    def p(self, i: int, j: int, k: int) -> Polynomial:
        return self.param_ring.var(self._pidx[(min(i, j), max(i, j), k)])

    def s(self, *idx: int) -> Polynomial:
        return self.sym_ring.var(self._sidx[tuple(sorted(idx))])

    @property
    def mids(self) -> range:
        return range(2, self.n)

    def _linear_relations(self) -> List[Polynomial]:
        n, p = self.n, self.p
        out = []
        for i in self.mids:
            out.append(p(1, 1, i) - p(1, i, n))
            out.append(p(1, i, i) - p(i, i, n))
        for i, j in permutations(self.mids, 2):
            out.append(p(1, j, i) - p(i, j, n))
            out.append(p(i, j, j) - p(j, j, i))
        for i, j, k in permutations(self.mids, 3):
            out.append(p(i, j, k) - p(j, k, i))
        return _dedupe(out)

    def _pair_generators(self) -> List[Polynomial]:
        n, p = self.n, self.p
        mids = list(self.mids)
        R = self.param_ring
        out = []

        def total(fn):
            return sum((fn(m) for m in mids), R.zero())

        for i in mids:
            out.append(p(1, 1, n) - total(lambda m: p(i, m, n) * p(1, m, i) - p(1, m, n) * p(i, m, i)))
        for i, j in permutations(mids, 2):
            out.append(p(1, 1, i) - total(lambda m: p(j, m, n) * p(i, m, j) - p(i, m, n) * p(j, m, j)))
            out.append(total(lambda m: p(1, m, n) * p(i, m, j) - p(i, m, n) * p(1, m, j)))
            out.append(p(1, i, i) + p(1, j, j) - total(lambda m: p(j, m, i) * p(i, m, j) - p(i, m, i) * p(j, m, j)))
        for i, j, k in permutations(mids, 3):
            out.append(p(1, j, k) - total(lambda m: p(j, m, i) * p(i, m, k) - p(i, m, i) * p(j, m, k)))
            out.append(total(lambda m: p(j, m, n) * p(i, m, k) - p(i, m, n) * p(j, m, k)))
        for i, j, k, l in permutations(mids, 4):
            out.append(total(lambda m: p(i, m, j) * p(k, m, l) - p(k, m, j) * p(i, m, l)))
        return _dedupe(out)

    def _sym_generators(self) -> List[Polynomial]:
        n, a = self.n, self.s
        mids = list(self.mids)
        R = self.sym_ring
        out = []

        def total(fn):
            return sum((fn(m) for m in mids), R.zero())

        for i in mids:
            out.append(a(1, 1, n) - total(lambda m: a(1, i, m) ** 2 - a(1, 1, m) * a(i, i, m)))
        for i, j in permutations(mids, 2):
            out.append(a(1, 1, i) - total(lambda m: a(1, j, m) * a(i, j, m) - a(1, i, m) * a(j, j, m)))
            out.append(total(lambda m: a(1, 1, m) * a(i, j, m) - a(1, i, m) * a(1, j, m)))
            out.append(a(1, i, i) + a(1, j, j) - total(lambda m: a(i, j, m) ** 2 - a(i, i, m) * a(j, j, m)))
        for i, j, k in permutations(mids, 3):
            out.append(a(1, j, k) - total(lambda m: a(i, j, m) * a(i, k, m) - a(i, i, m) * a(j, k, m)))
            out.append(total(lambda m: a(1, j, m) * a(i, k, m) - a(1, i, m) * a(j, k, m)))
        for i, j, k, l in permutations(mids, 4):
            out.append(total(lambda m: a(i, j, m) * a(k, l, m) - a(j, k, m) * a(i, l, m)))
        return _dedupe(out)

    # maps between the two coordinate systems
    def symmetrize(self, f: Polynomial) -> Polynomial:
        """Rewrite a polynomial in the parameters through the linear relations."""
        images = [self.s(*representative(i, j, k, self.n)) for (i, j, k) in self.params]
        return f.substitute(images, self.sym_ring)

    def unsymmetrize(self, f: Polynomial) -> Polynomial:
        """Read ``a_11k, a_1jk, a_ijk`` as ``a(11,k), a(1j,k), a(ij,k)``."""
        images = []
        for t in self.triples:
            if t[:2] == (1, 1):
                images.append(self.p(1, 1, t[2]))
            elif t[0] == 1:
                images.append(self.p(1, t[1], t[2]))
            else:
                images.append(self.p(t[0], t[1], t[2]))
        return f.substitute(images, self.param_ring)

    def sym_point(self, a: ChartPoint) -> List[Fraction]:
        vals = a.symmetric_values()
        return [vals[t] for t in self.triples]

    # geometry at the base point
    def linear_parts(self) -> List[Polynomial]:
        forms = list(self.linear_relations)
        forms += [self.unsymmetrize(g).homogeneous_part(1) for g in self.generators]
        return [f for f in forms if f]

    def tangent_dim(self) -> int:
        ech = Echelon(lambda e: e)
        for f in self.linear_parts():
            ech.add({e.index(1): c for e, c in f.terms.items()})
        return len(self.params) - len(ech)

    def residuals(self, a: ChartPoint) -> List[Fraction]:
        vals = a.as_dict()
        point = [vals[p] for p in self.params]
        out = [f.evaluate(point) for f in self.linear_relations]
        spt = self.sym_point(a)
        out += [g.evaluate(spt) for g in self.generators]
        return out

    def generators_by_weight(self) -> Dict[int, List[Polynomial]]:
        out: Dict[int, List[Polynomial]] = {}
        for g in self.generators:
            ws = g.weighted_degrees(self.sym_weights)
            if len(ws) != 1:
                raise WrongDimension(f"inhomogeneous generator {render(g)}")
            out.setdefault(ws.pop(), []).append(g)
        return out

    def a_block(self) -> List[List[Polynomial]]:
        """Rows ``ij`` (grevlex), columns ``k = 2..n`` of the parameter block of the coefficient matrix."""
        return [[-self.p(i, j, k) for k in range(2, self.n + 1)] for (i, j) in pair_order(self.n)]

    def minors_span(self) -> Subspace:
        """Span of 1, the parameters and the 2x2 minors of the parameter block."""
        block = self.a_block()
        gens = [self.param_ring.const(Fraction(1))] + self.param_ring.gens()
        for r1, r2 in combinations(range(len(block)), 2):
            for c1, c2 in combinations(range(self.n - 1), 2):
                gens.append(block[r1][c1] * block[r2][c2] - block[r1][c2] * block[r2][c1])
        return Subspace(self.param_ring, gens)

    def equations_json(self) -> dict:
        return {
            "n": self.n,
            "variables": list(self.sym_ring.names),
            "weights": self.sym_weights,
            "generators": [render(g) for g in self.generators],
            "linear_relations": [render(f) for f in self.linear_relations],
        }


def _dedupe(polys: Iterable[Polynomial]) -> List[Polynomial]:
    """Drop zeros and repeats up to sign, keeping first occurrences."""
    seen = set()
    out = []
    for f in polys:
        if not f:
            continue
        lead = f.leading_term()[1]
        key = f if lead > 0 else -f
        if key in seen:
            continue
        seen.add(key)
        out.append(f)
    return out


@lru_cache(maxsize=None)
def chart_system(n: int) -> ChartSystem:
    return ChartSystem(n)


def residuals(a: ChartPoint) -> List[Fraction]:
    return chart_system(a.n).residuals(a)


def on_chart(a: ChartPoint) -> bool:
    return not any(residuals(a))


def tangent_dim(n: int) -> int:
    return chart_system(n).tangent_dim()


# -- explicit parametrisation for small n ---------------------------------------

FREE_PARAMS = {
    3: [(1, 1, 2), (1, 2, 2), (2, 2, 2)],
    4: [(1, 2, 2), (1, 2, 3), (2, 3, 3), (2, 2, 3), (2, 2, 2), (3, 3, 3)],
    5: [(i, j, k) for i in range(2, 5) for j in range(i, 5) for k in range(j, 5)],
}


@lru_cache(maxsize=None)
def parameterization(n: int) -> Tuple[Ring, Tuple[Polynomial, ...]]:
    """Every symmetric variable as a polynomial in the free ones.

    Bound variables are solved weight by weight: a generator of weight ``w``
    is linear in the variables of weight ``w`` and otherwise only involves
    lighter ones, so each step is a linear solve.
    """
    if n not in FREE_PARAMS:
        raise Unsupported(f"no explicit parametrisation for n = {n}")
    cs = chart_system(n)
    free = [representative(i, j, k, n) for (i, j, k) in FREE_PARAMS[n]]
    free_ring = Ring(tuple(sym_name(t) for t in free))
    values: Dict[Tuple[int, int, int], Polynomial] = {t: free_ring.var(i) for i, t in enumerate(free)}
    by_weight = cs.generators_by_weight()
    for w in sorted(by_weight):
        bound = [t for t in cs.triples if sym_weight(t, n) == w and t not in values]
        if not bound:
            continue
        known = {t: v for t, v in values.items()}
        rows = []
        rhs = []
        for g in by_weight[w]:
            lin = {}
            rest_terms = {}
            for e, c in g.terms.items():
                vars_ = [i for i, x in enumerate(e) for _ in range(x)]
                if len(vars_) == 1 and cs.triples[vars_[0]] in bound:
                    lin[cs.triples[vars_[0]]] = c
                else:
                    rest_terms[e] = c
            rest = Polynomial(cs.sym_ring, rest_terms)
            images = [known.get(t, free_ring.zero()) for t in cs.triples]
            rows.append([lin.get(t, Fraction(0)) for t in bound])
            rhs.append(-rest.substitute(images, free_ring))
        # eliminate with exact rationals on the constant coefficient matrix
        solution = _solve_polynomial_system(rows, rhs, free_ring)
        for t, v in zip(bound, solution):
            values[t] = v
    missing = [t for t in cs.triples if t not in values]
    if missing:
        raise Unsupported(f"variables left unsolved: {missing}")
    return free_ring, tuple(values[t] for t in cs.triples)


def _solve_polynomial_system(rows: List[List[Fraction]], rhs: List[Polynomial], ring: Ring) -> List[Polynomial]:
    """Solve ``rows * x = rhs`` for a constant matrix with full column rank."""
    nvar = len(rows[0])
    rows = [list(r) for r in rows]
    rhs = list(rhs)
    pivots = []
    r = 0
    for c in range(nvar):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            raise Unsupported("bound variables are not determined by their weight")
        rows[r], rows[piv] = rows[piv], rows[r]
        rhs[r], rhs[piv] = rhs[piv], rhs[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        rhs[r] = rhs[r] * inv
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                rhs[i] = rhs[i] - rhs[r] * f
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rhs[i]:
            raise Unsupported(f"inconsistent equation {render(rhs[i])}")
    return rhs[:nvar]


def chart_parameterize(n: int, free: Sequence) -> ChartPoint:
    """Chart point from values of the free parameters listed in ``FREE_PARAMS[n]``."""
    ring, images = parameterization(n)
    if len(free) != ring.nvars:
        raise WrongDimension(f"n = {n} has {ring.nvars} free parameters")
    pt = [Fraction(v) for v in free]
    sym = {t: img.evaluate(pt) for t, img in zip(chart_system(n).triples, images)}
    return ChartPoint.from_mapping(n, {p: sym[representative(*p, n)] for p in chart_params(n)})


def point_from_symmetric(n: int, sym: Mapping[Tuple[int, int, int], object]) -> ChartPoint:
    return ChartPoint.from_mapping(n, {p: Fraction(sym.get(representative(*p, n), 0)) for p in chart_params(n)})


# -- distinguished subvarieties -------------------------------------------------

def _mid_vector(n: int, s: Sequence) -> List[Fraction]:
    s = [Fraction(v) for v in s]
    if len(s) != n - 2:
        raise WrongDimension(f"expected {n - 2} coordinates for n = {n}")
    if not any(s):
        raise ZeroVector("s must be nonzero")
    return s


def vero_point(s: Sequence) -> ChartPoint:
    """Chart point with ``a(ij,k) = s_i s_j s_k`` on middle indices and zero elsewhere."""
    n = len(s) + 2
    _check_n(n)
    s = _mid_vector(n, s)
    vals = {}
    for i in range(2, n):
        for j in range(i, n):
            for k in range(2, n):
                vals[(i, j, k)] = s[i - 2] * s[j - 2] * s[k - 2]
    return ChartPoint.from_mapping(n, vals)


def gamma_s_ideal(s: Sequence) -> List[Polynomial]:
    """Generators ``x1 x_i``, ``x_i^2 - x1 xn - s_i^2 <s,x> xn``, ``x_i x_j - s_i s_j <s,x> xn``."""
    n = len(s) + 2
    s = _mid_vector(n, s)
    x = Ring.x(n).gens()
    xn = x[n - 1]
    sx = sum((c * x[k + 1] for k, c in enumerate(s)), Ring.x(n).zero())
    gens = [x[0] * x[i] for i in range(n - 1)]
    for i in range(2, n):
        for j in range(i, n):
            g = x[i - 1] * x[j - 1] - sx * xn * (s[i - 2] * s[j - 2])
            if i == j:
                g = g - x[0] * xn
            gens.append(g)
    return gens


def vero_support_point(s: Sequence) -> List[Fraction]:
    """The point ``|s|^2 <s,y> + yn`` of the scheme of ``gamma_s_ideal(s)``."""
    n = len(s) + 2
    s = _mid_vector(n, s)
    norm = sum(c * c for c in s)
    return [Fraction(0)] + [norm * c for c in s] + [Fraction(1)]


def _weight_one(n: int) -> Tuple[Ring, List[Tuple[int, int, int]]]:
    triples = [t for t in sym_triples(n) if sym_weight(t, n) == 1]
    return Ring(tuple(sym_name(t) for t in triples)), triples


def sec_ring(n: int) -> Ring:
    return _weight_one(n)[0]


def _restrict_to_sec(cs: ChartSystem, f: Polynomial) -> Polynomial:
    ring, triples = _weight_one(cs.n)
    pos = {t: i for i, t in enumerate(triples)}
    images = [ring.var(pos[t]) if t in pos else ring.zero() for t in cs.triples]
    return f.substitute(images, ring)


def sec_equations(n: int) -> List[Polynomial]:
    """Chart equations of schemes through ``p``: all parameters ``a(ij,n)`` set to zero.

    The linear relations then kill every symmetric variable of weight above
    one; the surviving generators are thinned to a linearly independent set
    in their original order.
    """
    cs = chart_system(n)
    ring = sec_ring(n)
    ech = Subspace(ring, [])
    out = []
    for g in cs.generators:
        h = _restrict_to_sec(cs, g)
        if h and h not in ech:
            out.append(h)
            ech = Subspace(ring, out)
    return out


def sec_mult_matrices(n: int) -> List[List[List[Polynomial]]]:
    """Multiplication by ``x_i`` (``i = 1..n-1``) on ``x1..x(n-1)`` over the ring of ``sec_ring(n)``.

    On schemes through ``p`` the products are ``x1 x_i = 0`` and
    ``x_i x_j = [i = j] x1 + sum_k a_ijk x_k`` for middle indices.
    """
    ring, triples = _weight_one(n)
    pos = {t: i for i, t in enumerate(triples)}
    dim = n - 1
    mats = []
    for i in range(1, n):
        m = [[ring.zero() for _ in range(dim)] for _ in range(dim)]
        if i >= 2:
            for j in range(2, n):
                col = j - 1
                if i == j:
                    m[0][col] = ring.const(1)
                for k in range(2, n):
                    m[k - 1][col] = ring.var(pos[tuple(sorted((i, j, k)))])
        mats.append(m)
    return mats


def _poly_matmul(a, b, ring):
    size = len(a)
    return [[sum((a[r][k] * b[k][c] for k in range(size) if a[r][k] and b[k][c]), ring.zero())
             for c in range(size)] for r in range(size)]


def _require_loc(n: int):
    if n not in (3, 4, 5):
        raise Unsupported(f"local equations are implemented for n = 3, 4, 5, not {n}")


def loc_trace_equations(n: int) -> List[Polynomial]:
    """Coefficients of ``tr(L_x^k)``, ``k = 1..n-2``, for generic ``x = sum t_i x_i``.

    A commutative finite-dimensional algebra has nilpotent maximal ideal
    exactly when multiplication by each of its elements is nilpotent, which
    in characteristic zero is the vanishing of these power traces.
    """
    ring, _ = _weight_one(n)
    mats = sec_mult_matrices(n)[1:]  # x1 acts by zero
    big = Ring(ring.names + tuple(f"t{i}" for i in range(2, n)))
    lift = lambda f: f.change_ring(big, list(range(ring.nvars)))
    size = n - 1
    gen = [[big.zero() for _ in range(size)] for _ in range(size)]
    for idx, m in enumerate(mats):
        t = big.var(ring.nvars + idx)
        for a in range(size):
            for b in range(size):
                if m[a][b]:
                    gen[a][b] = gen[a][b] + lift(m[a][b]) * t
    out = []
    power = gen
    for k in range(1, n - 1):
        if k > 1:
            power = _poly_matmul(power, gen, big)
        trace = sum((power[a][a] for a in range(size)), big.zero())
        coeffs: Dict[tuple, Dict[tuple, Fraction]] = {}
        for e, c in trace.terms.items():
            coeffs.setdefault(e[ring.nvars:], {})[e[:ring.nvars]] = c
        for key in sorted(coeffs):
            out.append(Polynomial(ring, coeffs[key]))
    return out


def loc_equations(n: int) -> List[Polynomial]:
    """Minimal homogeneous generators of the local stratum at ``p`` (``n = 3, 4, 5``).

    The ideal is generated by the equations of ``sec_equations(n)`` and the
    power-trace conditions of ``loc_trace_equations(n)``.
    """
    from .ideals import minimal_generators

    _require_loc(n)
    return minimal_generators(sec_equations(n) + loc_trace_equations(n))


def loc_word_equations(n: int) -> List[Polynomial]:
    """Raw nilpotency conditions: every coefficient of every degree ``n`` monomial in ``x2..x(n-1)``.

    Products with ``x1`` vanish on schemes through ``p``, so only words in the
    middle variables are expanded.
    """
    from .ideals import minimal_generators

    _require_loc(n)
    ring, _ = _weight_one(n)
    mats = sec_mult_matrices(n)
    size = n - 1
    # coordinates of each word on x1..x(n-1)
    vectors = {}
    for i in range(2, n):
        v = [ring.zero()] * size
        v[i - 1] = ring.const(1)
        vectors[(i,)] = v
    words = [(i,) for i in range(2, n)]
    for _ in range(n - 1):
        nxt = []
        for w in words:
            for i in range(w[-1], n):
                m = mats[i - 1]
                v = vectors[w]
                vectors[w + (i,)] = [sum((m[r][c] * v[c] for c in range(size) if m[r][c] and v[c]), ring.zero())
                                     for r in range(size)]
                nxt.append(w + (i,))
        words = nxt
    eqs = [c for w in words for c in vectors[w] if c]
    return minimal_generators(sec_equations(n) + eqs)


def sec_sample_scheme(n: int, c: Sequence, seed: int = 0) -> Subspace:
    """A scheme through ``p = [yn]`` apolar to the standard quadric.

    The quadric splits as ``2 yn l + sum_i (y_i - c_i yn)^2`` with
    ``l = y1 + <c,y> - |c|^2/2 yn``; the scheme is the double point at ``p``
    in the direction of ``l`` together with a polar simplex of the second
    summand, so it is apolar by the orthogonal decomposition of the quadric.
    """
    from .apolarity import ideal_of_points, random_polar_simplex, sum_of_squares

    _check_n(n)
    c = [Fraction(v) for v in c]
    if len(c) != n - 2:
        raise WrongDimension(f"expected {n - 2} coordinates for n = {n}")
    norm = sum(v * v for v in c)
    tangent = [Fraction(1)] + c + [-norm / 2]
    base = [Fraction(0)] * (n - 1) + [Fraction(1)]
    pts, _ = random_polar_simplex(sum_of_squares(n - 2), seed)
    points = []
    for z in pts:
        v = [Fraction(0)] + list(z) + [-sum((a * b for a, b in zip(z, c)), Fraction(0))]
        points.append(v)
    return ideal_of_points(points, tangents=[(base, tangent)])


def sec_coordinates(a: ChartPoint) -> List[Fraction]:
    """Values of the variables of ``sec_ring(n)`` at a chart point."""
    _, triples = _weight_one(a.n)
    vals = a.symmetric_values()
    return [vals[t] for t in triples]


def gamma_p(n: int) -> ChartPoint:
    """The contraction point of the chart: all parameters zero."""
    _check_n(n)
    return ChartPoint.zero(n)


def vero_equations(n: int) -> List[Polynomial]:
    """Equations of the cone over the cubic Veronese inside the chart.

    Every variable of weight above one vanishes, and the symmetric tensor
    ``a_ijk`` has rank one: all 2x2 minors of its flattening with rows ``i``
    and columns ``jk`` vanish.
    """
    cs = chart_system(n)
    out = [cs.s(*t) for t in cs.triples if sym_weight(t, n) > 1]
    mids = list(range(2, n))
    cols = [(j, k) for j in mids for k in mids if j <= k]
    entry = lambda i, c: cs.s(i, *c)
    minors = []
    for r1, r2 in combinations(mids, 2):
        for c1, c2 in combinations(cols, 2):
            minors.append(entry(r1, c1) * entry(r2, c2) - entry(r1, c2) * entry(r2, c1))
    return out + Subspace(cs.sym_ring, minors).basis
