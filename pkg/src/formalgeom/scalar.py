"""Exact Gaussian rationals.

Every algebraic layer of the package computes with :class:`Scalar`, a pair of
:class:`fractions.Fraction` objects.  No floating point is involved here.
"""

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

__all__ = ["Scalar", "I", "ZERO", "ONE", "as_scalar", "parse_scalar", "parse_rational"]


class Scalar:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _make(cls, re, im):
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if type(other) is Scalar:
            return Scalar._make(self.re + other.re, self.im + other.im)
        if isinstance(other, Rational):
            return Scalar._make(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if type(other) is Scalar:
            return Scalar._make(self.re - other.re, self.im - other.im)
        if isinstance(other, Rational):
            return Scalar._make(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return Scalar._make(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is Scalar:
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return Scalar._make(a * c, b)
            return Scalar._make(a * c - b * d, a * d + b * c)
        if isinstance(other, Rational):
            return Scalar._make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational) and type(other) is not Scalar:
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Scalar._make(self.re / other, self.im / other)
        if type(other) is not Scalar:
            return NotImplemented
        c, d = other.re, other.im
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("division by zero")
        a, b = self.re, self.im
        return Scalar._make((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return Scalar(other) / self
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return Scalar._make(self.re, -self.im)

    def abs2(self):
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self):
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is Scalar:
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # formatting -----------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        """Compact human form: ``-1/2``, ``3i``, ``1/2+3i``, ``i``."""
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            im = "i"
        elif self.im == -1:
            im = "-i"
        else:
            im = f"{self.im}i"
        if self.re == 0:
            return im
        if not im.startswith("-"):
            im = "+" + im
        return f"{self.re}{im}"

    def exact_str(self, spaced=True):
        """Canonical bit-exact form ``p/q + p'/q' i`` or ``p/q - p'/q' i`` (denominators always shown)."""
        re_s = f"{self.re.numerator}/{self.re.denominator}"
        sign = "-" if self.im < 0 else "+"
        im_s = f"{abs(self.im.numerator)}/{self.im.denominator}"
        if spaced:
            return f"{re_s} {sign} {im_s} i"
        return f"{re_s}{sign}{im_s}i"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(x):
    if type(x) is Scalar:
        return x
    if isinstance(x, Rational):
        return Scalar(x)
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact; build a Scalar from rationals")
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


_RAT = r"\d+(?:/\d+)?"
_IMAG_ONLY = re.compile(rf"^([+-]?)({_RAT})?i$")
_FULL = re.compile(rf"^([+-]?{_RAT})(?:([+-]{{1,2}})({_RAT})?i)?$")


def parse_rational(text):
    text = text.strip()
    try:
        if not re.fullmatch(rf"[+-]?{_RAT}", text):
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {text!r}") from None


def parse_scalar(text):
    """Parse ``p/q``, ``p/q+p'/q'i``, ``p/q + p'/q' i``, ``-i`` and similar."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string scalar, got {text!r}")
    s = "".join(text.split())
    try:
        m = _IMAG_ONLY.match(s)
        if m:
            im = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            return Scalar(0, -im if m.group(1) == "-" else im)
        m = _FULL.match(s)
        if m:
            real = Fraction(m.group(1))
            if m.group(2) is None:
                return Scalar(real)
            im = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            if m.group(2).count("-") % 2:
                im = -im
            return Scalar(real, im)
    except ZeroDivisionError:
        pass
    raise ParseError(f"not an exact Gaussian rational: {text!r}")
