"""One-shot verification suites with deterministic, seeded inputs.

Each suite returns a list of ``Check`` records.  Details never contain
timings or anything else that varies between runs, so the rendered report
is byte-identical for a fixed seed whatever the thread count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Sequence

from . import golden, upoly
from .apolarity import (QuadraticForm, ideal_of_points, perp_space, random_polar_simplex, standard_quadric,
                        sum_of_squares)
from .chart import (chart_ideal, chart_system, gamma_s_ideal, loc_equations, mult_table, normal_form, residuals,
                    sec_coordinates, sec_equations, sec_ring, sec_sample_scheme, tangent_dim, vero_point,
                    vero_support_point)
from .errors import NonIntegral, NotInChart, OutOfRange, VpsError
from .ideals import ideals_equal
from .intersection import VALIDATED_N, degree_terms, vps_degree
from .linalg import det, inverse, matmul
from .modp import AffineSystem, count_points, curvilinear_local_samples, jacobian_rank
from .mukai import curvilinear_scheme, eigensimplex, pencil_profile, tau_image
from .poly import Ring, parse
from .resolution import GradedQuotient, betti_numbers, expected_table
from .spinor import spinor_check
from .subspace import Subspace


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.suite}.{self.name}"
        return f"{text}: {self.detail}" if self.detail else text

    def as_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "ok": self.ok, "detail": self.detail}


# -- degree --------------------------------------------------------------------

def suite_degree(seed: int) -> List[Check]:
    out = []
    values = {n: vps_degree(n) for n in golden.DEGREES}
    ok = values == golden.DEGREES
    out.append(Check("degree", "golden", ok, " ".join(f"n={n}:{values[n]}" for n in sorted(values))))

    def integrality() -> Check:
        count = 0
        for n in range(2, VALIDATED_N + 1):
            for term in degree_terms(n):
                if term.summand < 0:
                    return Check("degree", "summands", False, f"negative summand at {term.partition.parts}")
                count += 1
        return Check("degree", "summands", True, f"{count} non-negative integral summands for n<={VALIDATED_N}")

    try:
        out.append(integrality())
    except NonIntegral as exc:
        out.append(Check("degree", "summands", False, str(exc)))
    return out


# -- chart generators and tangent spaces ---------------------------------------

def _golden_span(n: int) -> Subspace:
    cs = chart_system(n)
    return Subspace(cs.sym_ring, [cs.symmetrize(parse(t, cs.param_ring)) for t in golden.CHART_GENERATORS[n]])


def suite_chart(seed: int) -> List[Check]:
    out = []
    for n in sorted(golden.CHART_GENERATORS):
        cs = chart_system(n)
        mine = Subspace(cs.sym_ring, cs.generators)
        ok = mine == _golden_span(n)
        out.append(Check("chart", f"generators_n{n}", ok, f"dim {mine.dim}"))
    dims = {n: tangent_dim(n) for n in golden.TANGENT_DIMS}
    out.append(Check("chart", "tangent_dims", dims == golden.TANGENT_DIMS,
                     " ".join(f"n={n}:{d}" for n, d in sorted(dims.items()))))
    return out


# -- spinor --------------------------------------------------------------------

def suite_spinor(seed: int) -> List[Check]:
    report = spinor_check()
    detail = (f"quadrics={len(report.quadrics)} renamed={report.depends_on_renamed_forms} "
              f"span={report.span_matches} relation={report.relation_vanishes} pfaffians={report.pfaffians}")
    return [Check("spinor", "quadrics", report.ok, detail)]


# -- mukai ---------------------------------------------------------------------

def _transpose(m):
    return [list(r) for r in zip(*m)]


def _random_invertible(n: int, rnd: random.Random):
    while True:
        g = [[Fraction(rnd.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if det(g):
            return g


def _conjugate(q: QuadraticForm, g) -> QuadraticForm:
    m = [list(r) for r in q.matrix]
    return QuadraticForm.from_matrix(q.ring, matmul(matmul(_transpose(g), m), g))


def _move_ideal(ideal: Subspace, g) -> Subspace:
    """The ideal of the same scheme after the substitution ``y -> g y`` on the quadric side."""
    dual = _transpose(inverse(g))
    return Subspace(ideal.ring, [f.linear_substitution(dual) for f in ideal.basis], 2)


def _distinct(rnd: random.Random, count: int) -> List[Fraction]:
    values = rnd.sample(range(-9, 10), count)
    return [Fraction(v) for v in values]


def _composition(n: int, rnd: random.Random, min_parts: int) -> List[int]:
    while True:
        cuts = sorted(rnd.sample(range(1, n), rnd.randint(min_parts - 1, n - 1)))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        if len(parts) >= min_parts:
            return parts


def mukai_case(kind: str, n: int, rnd: random.Random):
    """A pencil ``(q, q2)`` with its expected common apolar ideal (``None`` when not unique)."""
    weights = [Fraction(rnd.choice([1, 2, 3, -1, -2])) for _ in range(n)]
    if kind in ("diagonal", "conjugated", "repeated"):
        q = sum_of_squares(n, weights)
        eig = _distinct(rnd, n)
        if kind == "repeated":
            eig[1] = eig[0]
        ring = q.ring
        q2 = QuadraticForm.from_poly(sum((weights[i] * eig[i] * ring.var(i) ** 2 for i in range(n)), ring.zero()))
        basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        expected = None if kind == "repeated" else ideal_of_points(basis)
        if kind == "diagonal":
            return q, q2, expected
        g = _random_invertible(n, rnd)
        return _conjugate(q, g), _conjugate(q2, g), expected and _move_ideal(expected, g)
    if kind in ("nilpotent", "mixed"):
        lengths = [n] if kind == "nilpotent" else _composition(n, rnd, 2)
        ideal, q, q2 = curvilinear_scheme(lengths)
        g = _random_invertible(n, rnd)
        return _conjugate(q, g), _conjugate(q2, g), _move_ideal(ideal, g)
    raise OutOfRange(f"unknown case kind {kind!r}")


MUKAI_KINDS = ("diagonal", "conjugated", "nilpotent", "mixed", "repeated")
MUKAI_CASES_PER_N = 70


def suite_mukai(seed: int) -> List[Check]:
    rnd = random.Random(seed)
    out = []
    total = unique = 0
    failures: List[str] = []
    for n in (3, 4, 5):
        for idx in range(MUKAI_CASES_PER_N):
            kind = MUKAI_KINDS[idx % len(MUKAI_KINDS)]
            q, q2, expected = mukai_case(kind, n, rnd)
            profile = pencil_profile(q, q2)
            image = tau_image(q, q2)
            total += 1
            full = image.dim == comb(n, 2)
            if full != profile.unique or profile.unique != (expected is not None):
                failures.append(f"n={n} case {idx} ({kind}): dim {image.dim}, unique {profile.unique}")
                continue
            if profile.unique:
                unique += 1
                if image != expected:
                    failures.append(f"n={n} case {idx} ({kind}): image differs from the apolar ideal")
                elif kind in ("diagonal", "conjugated") and eigensimplex(q, q2).ideal != expected:
                    failures.append(f"n={n} case {idx} ({kind}): eigensimplex differs")
    detail = f"{total} cases, {unique} unique" if not failures else failures[0]
    out.append(Check("mukai", "image_is_common_ideal", not failures, detail))
    return out


# -- betti ---------------------------------------------------------------------

def suite_betti(seed: int) -> List[Check]:
    out = []
    for n in (3, 4, 5):
        q = standard_quadric(n)
        aq = GradedQuotient(Ring.x(n), perp_space(q).basis)
        table = betti_numbers(aq, n).nonzero()
        out.append(Check("betti", f"apolar_algebra_n{n}", table == expected_table("aq", n), _table_str(table)))
        pts, _ = random_polar_simplex(sum_of_squares(n), seed)
        quot = GradedQuotient(Ring.x(n), ideal_of_points(pts).basis)
        table = betti_numbers(quot, n).nonzero()
        out.append(Check("betti", f"points_n{n}", table == expected_table("points", n), _table_str(table)))
    return out


def _table_str(table) -> str:
    return " ".join(f"b{i},{j}={v}" for (i, j), v in sorted(table.items()))


# -- round trips through the chart ---------------------------------------------

ROUND_TRIPS = 100


def round_trip(n: int, seed: int) -> str | None:
    """Empty string on success, the first failing step otherwise, ``None`` off the chart."""
    q = standard_quadric(n)
    pts, _ = random_polar_simplex(q, seed)
    ideal = ideal_of_points(pts)
    try:
        a = normal_form(ideal)
    except NotInChart:
        return None
    if any(residuals(a)):
        return "nonzero residual"
    table = mult_table(a)
    if not table.is_associative():
        return "multiplication is not associative"
    generic = [Fraction(k + 1) for k in range(n)]
    if not upoly.is_squarefree(table.minimal_polynomial(generic)):
        return "algebra is not reduced"
    if chart_ideal(a) != ideal:
        return "reconstructed ideal differs"
    return ""


def suite_roundtrip(seed: int) -> List[Check]:
    """``ROUND_TRIPS`` simplices per ``n``; seeds whose simplex meets the excluded hyperplane are skipped."""
    out = []
    for n in (3, 4, 5):
        done = skipped = 0
        failure = ""
        s = seed
        while done < ROUND_TRIPS and not failure:
            result = round_trip(n, s)
            if result is None:
                skipped += 1
            elif result:
                failure = f"seed {s}: {result}"
            else:
                done += 1
            s += 1
        detail = failure or f"{done} simplices, off-chart seeds skipped: {skipped}"
        out.append(Check("roundtrip", f"n{n}", not failure, detail))
    return out


# -- strata at p ----------------------------------------------------------------

SEC_SAMPLES = 12


def suite_subvariety(seed: int) -> List[Check]:
    out = []
    ring = sec_ring(5)
    ok = Subspace(ring, sec_equations(5)) == Subspace(ring, [parse(t, ring) for t in golden.SEC_EQUATIONS[5]])
    out.append(Check("subvariety", "sec_n5", ok, f"{len(sec_equations(5))} quadrics"))
    ring4 = sec_ring(4)
    ok = Subspace(ring4, sec_equations(4)) == Subspace(ring4, [parse(t, ring4) for t in golden.SEC_EQUATIONS[4]])
    out.append(Check("subvariety", "sec_n4", ok, "one quadric"))
    for n in sorted(golden.LOC_EQUATIONS):
        ring = sec_ring(n)
        golden_eqs = [parse(t, ring) for t in golden.LOC_EQUATIONS[n]]
        ok = ideals_equal(loc_equations(n), golden_eqs)
        out.append(Check("subvariety", f"loc_n{n}", ok, f"{len(loc_equations(n))} generators"))

    rnd = random.Random(seed)
    eqs = sec_equations(5)
    ranks = []
    k = seed
    while len(ranks) < SEC_SAMPLES:
        c = [Fraction(rnd.randint(-3, 3)) for _ in range(3)]
        k += 1
        try:
            a = normal_form(sec_sample_scheme(5, c, k))
        except NotInChart:
            continue
        ranks.append(jacobian_rank(eqs, sec_coordinates(a)))
    ok = all(r == golden.SEC_CODIM for r in ranks)
    out.append(Check("subvariety", "sec_jacobian", ok, f"ranks {' '.join(map(str, ranks))}"))
    return out


# -- veronese cone -------------------------------------------------------------

VERO_SAMPLES = 50


def suite_vero(seed: int) -> List[Check]:
    rnd = random.Random(seed)
    failures = []
    for k in range(VERO_SAMPLES):
        n = rnd.randint(3, 6)
        s = [Fraction(rnd.randint(-4, 4)) for _ in range(n - 2)]
        if not any(s):
            s[0] = Fraction(1)
        a = vero_point(s)
        gens = gamma_s_ideal(s)
        support = vero_support_point(s)
        if any(residuals(a)):
            failures.append(f"sample {k}: nonzero residual")
        elif Subspace(Ring.x(n), gens, 2) != chart_ideal(a):
            failures.append(f"sample {k}: quadric spans differ")
        elif any(g.evaluate(support) for g in gens):
            failures.append(f"sample {k}: support point not on the scheme")
    detail = f"{VERO_SAMPLES} samples" if not failures else failures[0]
    return [Check("vero", "membership", not failures, detail)]


# -- finite fields -------------------------------------------------------------

def suite_modp(seed: int) -> List[Check]:
    out = []
    system = AffineSystem.from_polys(sec_equations(5), 3)
    counts = {t: count_points(system, threads=t) for t in (1, 4)}
    ok = set(counts.values()) == {golden.SEC_POINT_COUNTS[3]}
    out.append(Check("modp", "sec_count_f3", ok, f"{counts[1]} points"))
    samples = curvilinear_local_samples(7, 10)
    ranks = [s["rank"] for s in samples]
    ok = len(ranks) == 10 and all(r == golden.LOC_CURVILINEAR_RANK for r in ranks)
    out.append(Check("modp", "loc_curvilinear_rank", ok, f"ranks {' '.join(map(str, ranks))}"))
    return out


def suite_modp_f5(seed: int) -> List[Check]:
    system = AffineSystem.from_polys(sec_equations(5), 5)
    count = count_points(system)
    return [Check("modp_f5", "sec_count_f5", count == golden.SEC_POINT_COUNTS[5], f"{count} points")]


SUITES: Dict[str, Callable[[int], List[Check]]] = {
    "degree": suite_degree,
    "chart": suite_chart,
    "spinor": suite_spinor,
    "mukai": suite_mukai,
    "betti": suite_betti,
    "roundtrip": suite_roundtrip,
    "subvariety": suite_subvariety,
    "vero": suite_vero,
    "modp": suite_modp,
    "modp_f5": suite_modp_f5,
}

# suites run when none are named; the F_5 enumeration is opt-in
DEFAULT_SUITES = tuple(name for name in SUITES if name != "modp_f5")


def run_suites(names: Sequence[str] | None = None, seed: int = 0) -> List[Check]:
    names = list(names or DEFAULT_SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise OutOfRange(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    out: List[Check] = []
    for name in names:
        try:
            out.extend(SUITES[name](seed))
        except VpsError as exc:
            out.append(Check(name, "error", False, f"{type(exc).__name__}: {exc}"))
    return out
