"""
Exact Gaussian rationals ``x + y*i`` with ``x, y`` in Q.

Both parts are ``gmpy2.mpq`` values, which are always stored in lowest terms
with a positive denominator, so structural equality is value equality.

Text format, used by every serializer in the package::

    "3"   "-1/2"   "i"   "-3/2i"   "1/2+i"   "1/2-1/3i"

Parsing also accepts whitespace and an explicit ``*`` before ``i``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import ParseError

__all__ = ["Scalar", "as_scalar", "ZERO", "ONE", "HALF", "I"]

_RAT = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"[+-]?{_RAT}")
_IMAG_RE = re.compile(rf"([+-]?)({_RAT})?\*?i")


def _to_mpq(x) -> mpq:
    if isinstance(x, (int, Rational)) or type(x) is type(mpq()):
        return mpq(x)
    if isinstance(x, str):
        if not _REAL_RE.fullmatch(x):
            raise ParseError(f"not a rational: {x!r}")
        return mpq(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def _fmt(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Scalar:
    """An immutable Gaussian rational."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_mpq(re))
        object.__setattr__(self, "im", _to_mpq(im))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, re: mpq, im: mpq) -> Scalar:
        # fast path: both parts are already mpq
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        object.__setattr__(s, "_hash", None)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar.parse, (str(self),))

    # -- text ---------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> Scalar:
        s = "".join(str(text).split())
        if not s:
            raise ParseError("empty scalar")
        if not s.endswith("i"):
            return cls(_to_mpq(s), 0)
        split = max(s.rfind("+"), s.rfind("-"))
        if split > 0:
            real, imag = s[:split], s[split:]
            if not _REAL_RE.fullmatch(real):
                raise ParseError(f"bad real part in {text!r}")
        else:
            real, imag = "0", s
        m = _IMAG_RE.fullmatch(imag)
        if m is None:
            raise ParseError(f"bad imaginary part in {text!r}")
        sign, coef = m.groups()
        im = mpq(Fraction(coef)) if coef else mpq(1)
        if sign == "-":
            im = -im
        return cls(_to_mpq(real), im)

    def __str__(self) -> str:
        if self.im == 0:
            return _fmt(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = _fmt(self.im) + "i"
        if self.re == 0:
            return imag
        if not imag.startswith("-"):
            imag = "+" + imag
        return _fmt(self.re) + imag

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    # -- predicates -----------------------------------------------------------

    def is_real(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    # -- arithmetic -----------------------------------------------------------

    def conjugate(self) -> Scalar:
        return Scalar._make(self.re, -self.im)

    def __neg__(self) -> Scalar:
        return Scalar._make(-self.re, -self.im)

    def __pos__(self) -> Scalar:
        return self

    def __add__(self, other) -> Scalar:
        o = as_scalar(other)
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        o = as_scalar(other)
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> Scalar:
        return as_scalar(other) - self

    def __mul__(self, other) -> Scalar:
        o = as_scalar(other)
        if self.im == 0 and o.im == 0:
            return Scalar._make(self.re * o.re, self.im)
        return Scalar._make(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.im == 0:
            if self.re == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar._make(1 / self.re, self.im)
        n = self.re * self.re + self.im * self.im
        return Scalar._make(self.re / n, -self.im / n)

    def __truediv__(self, other) -> Scalar:
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other) -> Scalar:
        return as_scalar(other) * self.inverse()

    # -- comparison -----------------------------------------------------------

    def key(self) -> tuple:
        return (self.re, self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        try:
            o = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.re) if self.im == 0 else hash((self.re, self.im))
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other) -> bool:
        o = as_scalar(other)
        return (self.re, self.im) < (o.re, o.im)

    def __le__(self, other) -> bool:
        o = as_scalar(other)
        return (self.re, self.im) <= (o.re, o.im)

    def __gt__(self, other) -> bool:
        o = as_scalar(other)
        return (self.re, self.im) > (o.re, o.im)

    def __ge__(self, other) -> bool:
        o = as_scalar(other)
        return (self.re, self.im) >= (o.re, o.im)


def as_scalar(x) -> Scalar:
    """Coerce ints, rationals and scalar strings to :class:`Scalar`."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return Scalar.parse(x)
    return Scalar(x)


ZERO = Scalar(0)
ONE = Scalar(1)
HALF = Scalar(Fraction(1, 2))
I = Scalar(0, 1)
