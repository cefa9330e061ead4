"""Scalars: rationals are plain ``Fraction``; prime-field elements are ``Fp``."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, FieldMismatch


class Fp:
    """An element of the prime field with ``p`` elements."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, Fp):
            if value.p != p:
                raise FieldMismatch(f"F_{value.p} element used in F_{p}")
            value = value.value
        elif isinstance(value, Fraction) or (isinstance(value, Rational) and not isinstance(value, int)):
            den = value.denominator % p
            if den == 0:
                raise DivisionByZero(f"denominator {value.denominator} vanishes mod {p}")
            value = value.numerator * pow(den, -1, p)
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"cannot combine F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return Fp(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.value == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return Fp(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return Fp(1, self.p) / Fp(pow(self.value, -e, self.p), self.p)
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == Fp(other, self.p).value
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def to_fraction(value) -> Fraction:
    """Parse ints, Fractions and strings such as ``"-3/4"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not a rational scalar: {value!r}")


def fraction_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
