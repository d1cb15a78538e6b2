"""Exact arithmetic over the quadratic field Q(sqrt2).

Every value is a pair of arbitrary-precision rationals (a, b) denoting the
real number a + b*sqrt(2).  The representation is unique, ordering is
decidable by integer comparisons alone, and membership in Q (b == 0) is a
trivial test.  No floating point is used in any decision; floats appear only
as display/cross-check conveniences.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering

__all__ = [
    "Fraction",
    "QNum",
    "SQRT2",
    "ZERO",
    "ONE",
    "qnum",
    "parse_qnum",
    "iroot",
]

_SQRT2_FLOAT = math.sqrt(2.0)

QLike = "QNum | Fraction | int"


def _as_fraction(x) -> Fraction | None:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


@total_ordering
class QNum:
    """An element a + b*sqrt(2) of Q(sqrt2), stored as two exact rationals."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Fraction | int = 0, b: Fraction | int = 0) -> None:
        fa = _as_fraction(a)
        fb = _as_fraction(b)
        if fa is None or fb is None:
            raise TypeError(f"QNum components must be int or Fraction, got {a!r}, {b!r}")
        self._a = fa
        self._b = fb

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return self._a

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt(2)."""
        return self._b

    # -- basic protocol ----------------------------------------------------

    def __repr__(self) -> str:
        return f"QNum({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        return self.literal()

    def __hash__(self) -> int:
        # b == 0 values hash like their Fraction so QNum(3) and 3 can mix as keys
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QNum):
            return self._a == other._a and self._b == other._b
        f = _as_fraction(other)
        if f is None:
            return NotImplemented
        return self._b == 0 and self._a == f

    def __lt__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    # -- field arithmetic --------------------------------------------------

    def __add__(self, other) -> "QNum":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QNum(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other) -> "QNum":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QNum(self._a - o._a, self._b - o._b)

    def __rsub__(self, other) -> "QNum":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "QNum":
        return QNum(-self._a, -self._b)

    def __pos__(self) -> "QNum":
        return self

    def __abs__(self) -> "QNum":
        return -self if self.sign() < 0 else self

    def __mul__(self, other) -> "QNum":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        # (a + b*r)(c + d*r) = ac + 2bd + (ad + bc)*r, with r^2 = 2
        return QNum(
            self._a * o._a + 2 * self._b * o._b,
            self._a * o._b + self._b * o._a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QNum":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero QNum")
        # multiply by the conjugate c - d*r; the norm c^2 - 2d^2 is a nonzero rational
        norm = o._a * o._a - 2 * o._b * o._b
        return QNum(
            (self._a * o._a - 2 * self._b * o._b) / norm,
            (self._b * o._a - self._a * o._b) / norm,
        )

    def __rtruediv__(self, other) -> "QNum":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "QNum":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- decisions ---------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2), one of -1, 0, +1.

        When a and b disagree in sign the comparison |a| vs |b|*sqrt(2) is
        settled by squaring: a^2 = 2b^2 is impossible for nonzero rationals,
        so the inequality is strict and decides the sign.
        """
        sa = _fsign(self._a)
        sb = _fsign(self._b)
        if sa == 0:
            return sb
        if sb == 0:
            return sa
        if sa == sb:
            return sa
        return sa if self._a * self._a > 2 * self._b * self._b else -sa

    def is_rational(self) -> bool:
        return self._b == 0

    def is_dyadic(self) -> bool:
        """True when the value is p / 2^n for integers p, n >= 0."""
        if self._b != 0:
            return False
        den = self._a.denominator
        return den & (den - 1) == 0

    def __floor__(self) -> int:
        """Largest integer n with n <= self, computed without floating point.

        Writes the value as (A + B*sqrt2)/C over a common denominator and
        brackets B*sqrt2 between consecutive integers via an exact integer
        square root; the bracket is tight, so a single floor division of
        integers gives the answer (estimate-and-correct with correction 0).
        """
        A = self._a.numerator * self._b.denominator
        B = self._b.numerator * self._a.denominator
        C = self._a.denominator * self._b.denominator
        if B == 0:
            f = 0
        elif B > 0:
            f = math.isqrt(2 * B * B)
        else:
            # B*sqrt2 is irrational, so floor = -(floor(|B|*sqrt2) + 1)
            f = -(math.isqrt(2 * B * B) + 1)
        return (A + f) // C

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * _SQRT2_FLOAT

    # -- rendering ---------------------------------------------------------

    def literal(self) -> str:
        """Exact textual form: `p/q`, or `p/q+r/s*sqrt2` / `p/q-r/s*sqrt2`."""
        if self._b == 0:
            return str(self._a)
        sign = "+" if self._b > 0 else "-"
        return f"{self._a}{sign}{abs(self._b)}*sqrt2"

    def approximate(self, digits: int) -> str:
        """Decimal expansion truncated toward zero after `digits` places.

        Derived purely from exact comparisons: the value scaled by 10^digits
        is floored inside the field, then rendered digit by digit.
        """
        if digits < 1:
            raise ValueError("digits must be >= 1")
        scaled = self * Fraction(10) ** digits
        neg = scaled.sign() < 0
        m = math.floor(abs(scaled))
        s = str(m).rjust(digits + 1, "0")
        return ("-" if neg else "") + s[:-digits] + "." + s[-digits:]


def _fsign(f: Fraction) -> int:
    if f > 0:
        return 1
    if f < 0:
        return -1
    return 0


def _coerce(x) -> QNum | None:
    if isinstance(x, QNum):
        return x
    f = _as_fraction(x)
    if f is None:
        return None
    return QNum(f)


def qnum(x) -> QNum:
    """Coerce an int, Fraction, or QNum to QNum."""
    q = _coerce(x)
    if q is None:
        raise TypeError(f"cannot interpret {x!r} as a QNum")
    return q


ZERO = QNum(0)
ONE = QNum(1)
SQRT2 = QNum(0, 1)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_PAIR_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)\*sqrt2$")


def parse_qnum(text: str) -> QNum:
    """Parse the literal grammar produced by QNum.literal (bit-exact round trip).

    Accepted forms: `p/q`, `p/q+r/s*sqrt2`, `p/q-r/s*sqrt2`, with integer
    shorthand (`3` for `3/1`) in either slot.  Decimal input is rejected on
    purpose; inputs must be exact.
    """
    s = text.strip().replace(" ", "")
    if _RATIONAL_RE.match(s):
        return QNum(Fraction(s))
    m = _PAIR_RE.match(s)
    if m:
        return QNum(Fraction(m.group(1)), Fraction(m.group(2)))
    raise ValueError(f"not a QNum literal: {text!r}")


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer, by Newton iteration."""
    if n < 0 or k < 1:
        raise ValueError("iroot requires n >= 0 and k >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)  # >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x
