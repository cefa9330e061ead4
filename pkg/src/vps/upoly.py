"""Dense univariate polynomials over Q, coefficients listed from the constant term up."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Sequence

UPoly = List[Fraction]


def trim(p: Sequence) -> UPoly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def monic(p: Sequence) -> UPoly:
    p = trim(p)
    if not p:
        return p
    return [c / p[-1] for c in p]


def divmod_poly(a: Sequence, b: Sequence):
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        f = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] -= f * c
        r = trim(r)
    return trim(q), r


def gcd(a: Sequence, b: Sequence) -> UPoly:
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def gcd_all(polys: Sequence[Sequence]) -> UPoly:
    g: UPoly = []
    for p in polys:
        g = gcd(g, p)
        if len(g) == 1:
            break
    return g


def derivative(p: Sequence) -> UPoly:
    return trim([i * Fraction(c) for i, c in enumerate(p)][1:])


def evaluate(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def interpolate(fn: Callable[[Fraction], Fraction], deg: int) -> UPoly:
    """The polynomial of degree at most ``deg`` through ``fn`` at ``0..deg`` (Newton form)."""
    xs = [Fraction(i) for i in range(deg + 1)]
    table = [fn(x) for x in xs]
    coeffs = [table[0]]
    for level in range(1, deg + 1):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coeffs.append(table[0])
    out: UPoly = [Fraction(0)]
    basis: UPoly = [Fraction(1)]
    for k, c in enumerate(coeffs):
        out = _add(out, [c * b for b in basis])
        basis = _mul(basis, [-xs[k], Fraction(1)])
    return trim(out)


def _add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def is_squarefree(p: Sequence) -> bool:
    return degree(gcd(p, derivative(p))) == 0


def rational_roots(p: Sequence) -> Dict[Fraction, int]:
    """Rational roots with multiplicity."""
    import sympy

    p = trim(p)
    if len(p) <= 1:
        return {}
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)], t, domain="QQ")
    return {Fraction(int(r.p), int(r.q)): m for r, m in poly.ground_roots().items()}


def to_str(p: Sequence, var: str = "t") -> str:
    from .poly import Ring, Polynomial, render

    ring = Ring((var,))
    return render(Polynomial(ring, {(i,): c for i, c in enumerate(trim(p))}))
