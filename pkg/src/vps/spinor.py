"""The six-point chart as a cone over the ten-dimensional spinor variety.

For ``n = 6`` the weight-2 chart equations are linear in the ten variables
``a1jk``; eliminating them leaves ten quadrics in the twenty variables
``a_ijk`` (``2 <= i <= j <= k <= 5``).  These only depend on sixteen linear
forms, and after renaming those forms as spinor coordinates the quadrics
become the standard equations of the spinor variety in P^15.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .chart import chart_system, representative, sym_name, sym_weight
from .ideals import ideals_equal
from .linalg import inverse, kernel, rank
from .poly import Polynomial, Ring, parse, render
from .subspace import Subspace

N = 6

# spinor coordinates as linear forms in the a_ijk (digits in any order)
RENAMING: Tuple[Tuple[str, str], ...] = (
    ("x1234", "-a353 + a252"),
    ("x15", "-a555 + a454 + a353 + a252"),
    ("x34", "a453"),
    ("x1235", "a554 - a444 + a343 + a242"),
    ("x14", "a343 - a242"),
    ("x35", "a553 - a232"),
    ("x1245", "-a553 - a443 + a333 - a232"),
    ("x13", "a553 - a443"),
    ("x24", "a452"),
    ("x1345", "a552 + a442 + a332 - a222"),
    ("x12", "a552 - a442"),
    ("x23", "a352"),
    ("x2345", "a454 - a353"),
    ("x45", "a554 - a242"),
    ("x25", "-a442 + a332"),
    ("x0", "a342"),
)

SPINOR_QUADRICS: Tuple[str, ...] = (
    "x25*x34 - x35*x24 + x45*x23 + x2345*x0",
    "-x45*x13 + x14*x35 - x15*x34 + x1345*x0",
    "x45*x12 - x14*x25 + x15*x24 + x1245*x0",
    "-x35*x12 + x13*x25 - x15*x23 + x1235*x0",
    "x12*x34 - x13*x24 + x14*x23 + x1234*x0",
    "x1345*x12 + x1245*x13 + x1235*x14 + x15*x1234",
    "-x2345*x12 + x1245*x23 + x1235*x24 + x1234*x25",
    "-x2345*x13 - x1345*x23 + x1235*x34 + x1234*x35",
    "-x2345*x14 - x1345*x24 - x1245*x34 + x1234*x45",
    "-x15*x2345 - x1345*x25 - x1245*x35 - x1235*x45",
)

# the four-index coordinate eliminated by each of the first five quadrics at x0 = 1
PFAFFIAN_INDICES: Tuple[str, ...] = ("2345", "1345", "1245", "1235", "1234")


def _sorted_names(text: str) -> str:
    return re.sub(r"a(\d{3})", lambda m: "a" + "".join(sorted(m.group(1))), text)


def spinor_ring() -> Ring:
    return Ring(tuple(name for name, _ in RENAMING))


def spinor_quadrics() -> List[Polynomial]:
    ring = spinor_ring()
    return [parse(t, ring) for t in SPINOR_QUADRICS]


def _pure_ring() -> Tuple[Ring, List[Tuple[int, int, int]]]:
    cs = chart_system(N)
    triples = [t for t in cs.triples if sym_weight(t, N) == 1]
    return Ring(tuple(sym_name(t) for t in triples)), triples


def eliminated_quadrics() -> List[Polynomial]:
    """Combinations of the weight-2 chart equations free of the variables ``a1jk``."""
    cs = chart_system(N)
    gens = [g for g in cs.generators if g.weighted_degrees(cs.sym_weights) == {2}]
    linear_vars = [i for i, t in enumerate(cs.triples) if sym_weight(t, N) == 2]
    rows = []
    for v in linear_vars:
        e = tuple(1 if k == v else 0 for k in range(cs.sym_ring.nvars))
        rows.append([g.coeff(e) for g in gens])
    ring, triples = _pure_ring()
    pos = {t: i for i, t in enumerate(triples)}
    images = [ring.var(pos[t]) if t in pos else ring.zero() for t in cs.triples]
    out = []
    for combo in kernel(rows, len(gens)):
        f = sum((g * c for g, c in zip(gens, combo) if c), cs.sym_ring.zero())
        out.append(f.substitute(images, ring))
    return Subspace(ring, out, 2).basis


def renaming_forms() -> List[Polynomial]:
    ring, _ = _pure_ring()
    return [parse(_sorted_names(text), ring) for _, text in RENAMING]


@dataclass(frozen=True)
class SpinorReport:
    quadrics: Tuple[Polynomial, ...]
    depends_on_renamed_forms: bool
    span_matches: bool
    relation_vanishes: bool
    pfaffians: bool

    @property
    def ok(self) -> bool:
        return self.depends_on_renamed_forms and self.span_matches and self.relation_vanishes and self.pfaffians

    def as_dict(self) -> dict:
        return {
            "quadrics": [render(q) for q in self.quadrics],
            "depends_on_renamed_forms": self.depends_on_renamed_forms,
            "span_matches": self.span_matches,
            "relation_vanishes": self.relation_vanishes,
            "pfaffians": self.pfaffians,
            "ok": self.ok,
        }


def _rewrite_in_spinor_coordinates(quadrics: List[Polynomial]) -> Tuple[List[Polynomial], bool]:
    """Express quadrics in the renamed forms, completed by coordinate variables to a basis."""
    ring, _ = _pure_ring()
    forms = renaming_forms()
    rows = [[f.coeff(e) for e in _unit_exponents(ring)] for f in forms]
    extra = []
    for i in range(ring.nvars):
        candidate = rows + [[Fraction(int(j == i)) for j in range(ring.nvars)]]
        if rank(candidate) == len(candidate):
            rows = candidate
            extra.append(ring.names[i])
    big = Ring(spinor_ring().names + tuple(f"z{name}" for name in extra))
    inv = inverse(rows)  # column c gives old variable c in terms of the new ones
    images = [sum((big.var(r) * inv[c][r] for r in range(big.nvars) if inv[c][r]), big.zero())
              for c in range(ring.nvars)]
    rewritten = [q.substitute(images, big) for q in quadrics]
    clean = all(all(not e[len(forms) + k] for e in q.terms for k in range(len(extra))) for q in rewritten)
    target = spinor_ring()
    out = []
    for q in rewritten:
        out.append(Polynomial(target, {e[:len(forms)]: c for e, c in q.terms.items()}))
    return out, clean


def _unit_exponents(ring: Ring) -> List[tuple]:
    return [tuple(int(j == i) for j in range(ring.nvars)) for i in range(ring.nvars)]


def pfaffian(indices: str, ring: Ring) -> Polynomial:
    i, j, k, l = indices
    v = lambda a, b: ring[f"x{a}{b}"]
    return v(i, j) * v(k, l) - v(i, k) * v(j, l) + v(i, l) * v(j, k)


def pfaffian_identities(quadrics: List[Polynomial]) -> bool:
    """At ``x0 = 1`` each of the first five quadrics is ``x_ijkl`` plus or minus a Pfaffian."""
    ring = spinor_ring()
    x0 = ring.index("x0")
    images = [ring.const(1) if i == x0 else ring.var(i) for i in range(ring.nvars)]
    for q, idx in zip(quadrics[:5], PFAFFIAN_INDICES):
        rest = q.substitute(images, ring) - ring[f"x{idx}"]
        pf = pfaffian(idx, ring)
        if rest != pf and rest != -pf:
            return False
    return True


def spinor_check() -> SpinorReport:
    computed = eliminated_quadrics()
    renamed, clean = _rewrite_in_spinor_coordinates(computed)
    golden = spinor_quadrics()
    ring = spinor_ring()
    span_ok = len(computed) == 10 and Subspace(ring, renamed, 2) == Subspace(ring, golden, 2)
    relation = sum((golden[i] * golden[i + 5] for i in range(5)), ring.zero())
    return SpinorReport(tuple(renamed), clean, span_ok, relation.is_zero(), pfaffian_identities(golden))


# minimal generators of the n = 6 chart, weight 2, 3 and 4
def minimal_chart_generators() -> List[Polynomial]:
    cs = chart_system(N)
    a = lambda *idx: _sym_var(cs, idx)
    mids = range(2, 6)
    total = lambda fn: sum((fn(m) for m in mids), cs.sym_ring.zero())
    out = []
    for k in mids:
        others = [v for v in mids if v != k]
        for x in range(len(others)):
            for y in range(x + 1, len(others)):
                i, j = others[x], others[y]
                out.append(-a(i, j, 6) + total(lambda m: a(i, k, m) * a(j, k, m) - a(i, j, m) * a(k, k, m)))
    for x in range(2, 6):
        for y in range(x + 1, 6):
            i, j = x, y
            out.append(-a(i, i, 6) - a(j, j, 6) + total(lambda m: a(i, j, m) ** 2 - a(i, i, m) * a(j, j, m)))
    out.append(total(lambda m: a(2, 3, m) * a(4, 5, m) - a(2, 4, m) * a(3, 5, m)))
    out.append(total(lambda m: a(2, 3, m) * a(4, 5, m) - a(2, 5, m) * a(3, 4, m)))
    for i in (2, 3, 4):
        out.append(a(1, 1, i) - total(lambda m: a(m, 5, 6) * a(i, m, 5) - a(i, m, 6) * a(m, 5, 5)))
    out.append(a(1, 1, 5) - total(lambda m: a(m, 4, 6) * a(m, 4, 5) - a(m, 5, 6) * a(m, 4, 4)))
    out.append(a(1, 1, 6) - total(lambda m: a(m, 5, 6) ** 2) + total(lambda m: a(1, 1, m) * a(m, 5, 5)))
    return out


def _sym_var(cs, idx) -> Polynomial:
    idx = sorted(idx)
    if N in idx:
        idx.remove(N)
        t = representative(idx[0], idx[1], N, N)
    else:
        t = tuple(idx)
    return cs.s(*t)


def minimal_generators_agree() -> bool:
    cs = chart_system(N)
    return ideals_equal(cs.generators, minimal_chart_generators(), cs.sym_weights)
