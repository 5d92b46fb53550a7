"""Exact scalars: rationals and elements of a real quadratic field Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` objects.  Anything with a
nonzero surd part is a :class:`QuadSurd`; arithmetic that cancels the surd
part falls back to ``Fraction``, so the common all-rational case never pays
for the extra bookkeeping.

Only one radicand may be active in a computation.  Mixing ``sqrt(2)`` and
``sqrt(3)`` raises ``ValueError`` rather than silently leaving the field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Union

__all__ = [
    "QuadSurd",
    "Scalar",
    "as_scalar",
    "sqrt",
    "sign",
    "is_zero",
    "radicand_of",
    "format_scalar",
    "parse_scalar",
]


def _squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadSurd:
    """``a + b*sqrt(d)`` with ``a, b`` rational, ``b != 0`` and ``d`` square-free."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        b = Fraction(b)
        if b == 0:
            raise ValueError("surd part must be nonzero; use Fraction instead")
        if not _squarefree(d):
            raise ValueError(f"radicand {d} is not a square-free integer > 1")
        self.a = Fraction(a)
        self.b = b
        self.d = d

    @staticmethod
    def make(a, b, d: int) -> "Scalar":
        if b == 0:
            return Fraction(a)
        return QuadSurd(a, b, d)

    def _coerce(self, other):
        if isinstance(other, QuadSurd):
            if other.d != self.d:
                raise ValueError(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) in one computation"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadSurd.make(self.a + o[0], self.b + o[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadSurd.make(self.a - o[0], self.b - o[1], self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadSurd.make(o[0] - self.a, o[1] - self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c, e = o
        return QuadSurd.make(
            self.a * c + self.b * e * self.d, self.a * e + self.b * c, self.d
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        norm = self.a * self.a - self.d * self.b * self.b
        # norm != 0 because sqrt(d) is irrational and b != 0
        return QuadSurd.make(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadSurd):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadSurd.make(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadSurd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 against d*b^2
        lhs, rhs = self.a * self.a, self.d * self.b * self.b
        return sa if lhs > rhs else sb

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.d**0.5

    def __repr__(self):
        return f"QuadSurd({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadSurd]


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, QuadSurds and exact strings to a scalar."""
    if isinstance(x, QuadSurd):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot make an exact scalar from {x!r}")


def sqrt(d: int) -> Scalar:
    """Exact square root of a positive integer, if it lives in some Q(sqrt(r))."""
    if d < 0:
        raise ValueError("only real quadratic fields are supported")
    r = isqrt(d)
    if r * r == d:
        return Fraction(r)
    # d = m^2 * r with r square-free
    m, k, rest = 1, 2, d
    while k * k <= rest:
        while rest % (k * k) == 0:
            rest //= k * k
            m *= k
        k += 1
    return QuadSurd(0, m, rest)


def sign(x: Scalar) -> int:
    if isinstance(x, QuadSurd):
        return x.sign()
    return (x > 0) - (x < 0)


def is_zero(x: Scalar) -> bool:
    return not isinstance(x, QuadSurd) and x == 0


def radicand_of(*xs) -> int:
    """The radicand shared by the given scalars (1 when all are rational)."""
    d = 1
    for x in xs:
        if isinstance(x, QuadSurd):
            if d != 1 and x.d != d:
                raise ValueError(f"mixed radicands {d} and {x.d}")
            d = x.d
    return d


def _frac(q: Fraction) -> str:
    return str(q)


def format_scalar(x: Scalar) -> str:
    """Exact string ``p/q`` or ``p/q+r/s*sqrt(d)``."""
    if isinstance(x, QuadSurd):
        surd = f"{_frac(x.b)}*sqrt({x.d})"
        if x.a == 0:
            return surd
        joiner = "" if x.b < 0 else "+"
        return f"{_frac(x.a)}{joiner}{surd}"
    return _frac(Fraction(x))


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})(?=\s*(?:[+-]|$)))?\s*"
    rf"(?:(?P<b>[+-]?\s*(?:\d+(?:/\d+)?)?)\s*\*?\s*sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3"``, ``"-1/2"``, ``"1/2+3/4*sqrt(3)"``, ``"sqrt(3)"`` or ``"-sqrt(3)/2"``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    # trailing "/k" on a surd term, e.g. "sqrt(3)/2"
    div = Fraction(1)
    m = re.match(r"^(.*sqrt\(\d+\))/(\d+)$", s)
    if m and "+" not in s[1:] and "-" not in s[1:]:
        s, div = m.group(1), Fraction(int(m.group(2)))
    m = _SCALAR_RE.match(s)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise ValueError(f"not an exact scalar: {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    if m.group("d") is None:
        return a / div
    braw = m.group("b") or ""
    if braw in ("", "+"):
        b = Fraction(1)
    elif braw == "-":
        b = Fraction(-1)
    else:
        b = Fraction(braw)
    root = sqrt(int(m.group("d")))
    return (a + b * root) / div
