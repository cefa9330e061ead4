"""Sparse multivariate polynomials with exact coefficients.

A polynomial lives in a :class:`Ring`, an ordered tuple of variable names.
Terms are stored as ``{exponent tuple: coefficient}`` with zero coefficients
dropped.  Coefficients are ``Fraction`` unless the caller deliberately works
over a prime field with :class:`vps.scalars.Fp`.

The textual form accepted by :func:`parse` is::

    poly    := term (('+'|'-') term)*
    term    := coeff ('*'? varpow)* | varpow ('*' varpow)*
    coeff   := int ('/' uint)?
    varpow  := name ('^' uint)?

where ``name`` must be one of the ring's variables (``x3``, ``y12``, ``a12_4``).
Whitespace between tokens is ignored.  :func:`render` prints terms in
graded reverse lexicographic order with the ring's first variable largest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import NonHomogeneous, ParseError, RingMismatch
from .scalars import fraction_str

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    names: Tuple[str, ...]

    @staticmethod
    def x(n: int) -> "Ring":
        return Ring(tuple(f"x{i}" for i in range(1, n + 1)))

    @staticmethod
    def y(n: int) -> "Ring":
        return Ring(tuple(f"y{i}" for i in range(1, n + 1)))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def __getitem__(self, name: str) -> "Polynomial":
        return self.var(self.index(name))

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def monomials(self, degree: int) -> list:
        """All exponents of the given total degree, largest first."""
        n = self.nvars
        out = []
        for combo in combinations_with_replacement(range(n), degree):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        out.sort(key=grevlex_key, reverse=True)
        return out

    def dual(self) -> "Ring":
        """The x-ring for a y-ring and vice versa, same size."""
        n = self.nvars
        if self == Ring.x(n):
            return Ring.y(n)
        if self == Ring.y(n):
            return Ring.x(n)
        raise RingMismatch("only x/y rings have a dual")


def grevlex_key(e: Exponent):
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(e), tuple(-a for a in reversed(e)))


def _is_zero(c) -> bool:
    return not c


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Exponent, object] | None = None):
        self.ring = ring
        if terms is None:
            self.terms: Dict[Exponent, object] = {}
        else:
            self.terms = {e: c for e, c in terms.items() if not _is_zero(c)}

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def _raw(ring: Ring, terms: Dict[Exponent, object]) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.ring = ring
        p.terms = terms
        return p

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring.names} vs {other.ring.names}")
            return other
        return self.ring.const(other)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if _is_zero(other):
                return self.ring.zero()
            return Polynomial._raw(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        out: Dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / scalar if isinstance(scalar, int) else 1 / scalar)

    def __pow__(self, k: int):
        result = self.ring.const(Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({render(self)!r})"

    def __str__(self):
        return render(self)

    # -- inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_degree(self) -> int:
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise NonHomogeneous(render(self))
        return degs.pop() if degs else -1

    def coeff(self, e: Exponent):
        return self.terms.get(tuple(e), 0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self):
        return self.sorted_terms()[0]

    def variables_used(self) -> set:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def weighted_degrees(self, weights: Sequence[int]) -> set:
        return {sum(w * a for w, a in zip(weights, e)) for e in self.terms}

    # -- calculus and evaluation ---------------------------------------------
    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial._raw(self.ring, out)

    def __call__(self, point: Sequence):
        return self.evaluate(point)

    def evaluate(self, point: Sequence):
        if len(point) != self.ring.nvars:
            raise RingMismatch(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, a in zip(point, e):
                if a:
                    v = v * x ** a
            total = total + v
        return total

    def substitute(self, images: Sequence["Polynomial"], target: Ring | None = None) -> "Polynomial":
        """Replace variable ``i`` by ``images[i]`` (all in ``target``)."""
        if target is None:
            target = images[0].ring if images else self.ring
        result = target.zero()
        cache: Dict[Tuple[int, int], Polynomial] = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = images[i] ** a
                    term = term * cache[key]
            result = result + term
        return result

    def linear_substitution(self, matrix: Sequence[Sequence]) -> "Polynomial":
        """Replace variable ``i`` by ``sum_j matrix[i][j] * var_j``."""
        n = self.ring.nvars
        images = []
        for i in range(n):
            lin = {}
            for j in range(n):
                if matrix[i][j]:
                    e = [0] * n
                    e[j] = 1
                    lin[tuple(e)] = Fraction(matrix[i][j]) if isinstance(matrix[i][j], int) else matrix[i][j]
            images.append(Polynomial._raw(self.ring, lin))
        return self.substitute(images, self.ring)

    def change_ring(self, ring: Ring, mapping: Sequence[int] | None = None) -> "Polynomial":
        """Reinterpret in ``ring``; variable ``i`` becomes ``mapping[i]``."""
        if mapping is None:
            if ring.nvars != self.ring.nvars:
                raise RingMismatch("change_ring needs a mapping when sizes differ")
            return Polynomial._raw(ring, dict(self.terms))
        out = {}
        for e, c in self.terms.items():
            f = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    f[mapping[i]] += a
            out[tuple(f)] = out.get(tuple(f), 0) + c
        return Polynomial(ring, out)

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def normalized(self) -> "Polynomial":
        """Scale so the leading coefficient is 1."""
        if not self.terms:
            return self
        return self / self.leading_term()[1]


def polynomial_from_terms(ring: Ring, items: Iterable[Tuple[Exponent, object]]) -> Polynomial:
    out: Dict[Exponent, object] = {}
    for e, c in items:
        out[e] = out.get(e, 0) + c
    return Polynomial(ring, out)


def monomial(ring: Ring, e: Exponent, c=Fraction(1)) -> Polynomial:
    return Polynomial(ring, {tuple(e): c})


# -- apolarity action ---------------------------------------------------------

def diff_apply(operator: Polynomial, target: Polynomial) -> Polynomial:
    """Let ``operator`` act on ``target`` with variable ``i`` as the ``i``-th partial derivative.

    The result lives in the target's ring.
    """
    if operator.ring.nvars != target.ring.nvars:
        raise RingMismatch("operator and target rings differ in size")
    out: Dict[Exponent, object] = {}
    for a, ca in operator.terms.items():
        for b, cb in target.terms.items():
            if any(x > y for x, y in zip(a, b)):
                continue
            mult = 1
            for x, y in zip(a, b):
                if x:
                    mult *= factorial(y) // factorial(y - x)
            e = tuple(y - x for x, y in zip(a, b))
            v = out.get(e, 0) + ca * cb * mult
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return Polynomial._raw(target.ring, out)


# -- text form ----------------------------------------------------------------

def _render_coeff(c) -> str:
    if isinstance(c, Fraction) or isinstance(c, int):
        return fraction_str(Fraction(c))
    return str(c)


def render(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        negative = (isinstance(c, (int, Fraction)) and c < 0)
        mag = -c if negative else c
        factors = []
        for name, a in zip(p.ring.names, e):
            if a == 1:
                factors.append(name)
            elif a > 1:
                factors.append(f"{name}^{a}")
        if not factors:
            body = _render_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _render_coeff(mag) + "*" + "*".join(factors)
        if idx == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


class _Scanner:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.pos = 0
        self.ring = ring
        self.lookup = {name: i for i, name in enumerate(ring.names)}

    def offset(self, pos: int | None = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode("utf-8"))

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.offset(pos))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected digits")
        return int(self.text[start:self.pos])

    def name(self) -> int:
        self.skip()
        start = self.pos
        t = self.text
        while self.pos < len(t) and t[self.pos].isalpha() and t[self.pos].isascii():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a variable")
        digits_start = self.pos
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        if digits_start == self.pos:
            self.fail("variable needs an index", digits_start)
        if self.pos < len(t) and t[self.pos] == "_":
            self.pos += 1
            sub = self.pos
            while self.pos < len(t) and t[self.pos].isdigit():
                self.pos += 1
            if sub == self.pos:
                self.fail("expected digits after '_'")
        word = t[start:self.pos]
        if word not in self.lookup:
            self.fail(f"unknown variable {word!r}", start)
        return self.lookup[word]

    def varpow(self, exps: list):
        i = self.name()
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.uint()
        exps[i] += power

    def term(self, sign: int):
        exps = [0] * self.ring.nvars
        ch = self.peek()
        coeff = Fraction(sign)
        if ch.isdigit():
            num = self.uint()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                here = self.pos
                den = self.uint()
                if den == 0:
                    self.fail("zero denominator", here)
            coeff *= Fraction(num, den)
            while True:
                ch = self.peek()
                if ch == "*":
                    self.pos += 1
                    self.varpow(exps)
                elif ch.isalpha():
                    self.varpow(exps)
                else:
                    break
        elif ch.isalpha():
            self.varpow(exps)
            while self.peek() == "*":
                self.pos += 1
                self.varpow(exps)
        else:
            self.fail("expected a term" if ch else "unexpected end of input")
        return tuple(exps), coeff


def parse(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``; errors carry a byte offset."""
    sc = _Scanner(text, ring)
    terms: Dict[Exponent, Fraction] = {}
    sign = 1
    if sc.peek() in "+-" and sc.peek():
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
    while True:
        e, c = sc.term(sign)
        terms[e] = terms.get(e, Fraction(0)) + c
        ch = sc.peek()
        if ch == "":
            break
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            sc.fail(f"unexpected character {ch!r}")
        sc.pos += 1
    return Polynomial(ring, terms)


def infer_ring(texts: Iterable[str], letter: str) -> Ring:
    """Smallest x- or y-ring containing every index mentioned in ``texts``."""
    import re

    n = 0
    pattern = re.compile(rf"{letter}(\d+)")
    for t in texts:
        for m in pattern.finditer(t):
            n = max(n, int(m.group(1)))
    return Ring(tuple(f"{letter}{i}" for i in range(1, n + 1)))

