"""Exact complex rationals a + b*i with a, b in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to a rational number")


class GaussianRational:
    """An element of Q(i).

    Both parts are kept as :class:`fractions.Fraction`, so they are always in
    lowest terms with a positive denominator and equality is structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, complex):
            raise TypeError("floating complex values are not accepted; use exact parts")
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        return cls(x)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, Fraction(0))
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational._raw(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / hashing ---------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    # formatting -------------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({_fmt(self.re)!r}, {_fmt(self.im)!r})"

    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return f"({_fmt(self.im)}i)"
        sign = "-" if self.im < 0 else "+"
        return f"({_fmt(self.re)}{sign}{_fmt(abs(self.im))}i)"


def _fmt(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
