"""Exact scalars: rationals and Gaussian rationals, plus parsing helpers."""

from fractions import Fraction
from numbers import Rational


def to_fraction(value):
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are rejected; they would silently smuggle rounding into
    ground-truth computations.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "p") and hasattr(value, "q"):  # sympy Rational
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot use {value!r} as an exact rational")


def fraction_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class QQi:
    """Gaussian rational re + i*im with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = to_fraction(re)
        self.im = to_fraction(im)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, QQi):
            return value
        return cls(value, 0)

    def conjugate(self):
        return QQi(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def is_real(self):
        return self.im == 0

    def __add__(self, other):
        other = QQi.coerce(other)
        return QQi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __sub__(self, other):
        other = QQi.coerce(other)
        return QQi(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return QQi.coerce(other) - self

    def __mul__(self, other):
        other = QQi.coerce(other)
        return QQi(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QQi.coerce(other)
        d = other.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return QQi(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return QQi.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, QQi):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"QQi({fraction_str(self.re)})"
        return f"QQi({fraction_str(self.re)}, {fraction_str(self.im)})"


I = QQi(0, 1)
