"""Gaussian rationals.

Polynomial coefficients are stored as plain ``int`` or ``Fraction`` whenever
they are real, and as :class:`Scalar` only when the imaginary part is nonzero.
Every arithmetic result goes through :func:`simplify`, so the three
representations never disagree about equality.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class Scalar:
    """An exact element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # Field accessors in reduced-fraction form.
    @property
    def re_num(self) -> int:
        return self.re.numerator

    @property
    def re_den(self) -> int:
        return self.re.denominator

    @property
    def im_num(self) -> int:
        return self.im.numerator

    @property
    def im_den(self) -> int:
        return self.im.denominator

    def __add__(self, other):
        if isinstance(other, Scalar):
            return simplify_parts(self.re + other.re, self.im + other.im)
        if isinstance(other, Rational):
            return simplify_parts(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return simplify_parts(self.re - other.re, self.im - other.im)
        if isinstance(other, Rational):
            return simplify_parts(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return simplify_parts(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return simplify_parts(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, Rational):
            return simplify_parts(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division of Scalar by zero")
            return simplify_parts(self.re / other, self.im / other)
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return other * self.inverse()
        return NotImplemented

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        return simplify_parts(self.re / n, -self.im / n)

    def conjugate(self):
        return Scalar(self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = 1
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"Scalar({scalar_str(self)!r})"

    def __str__(self):
        return scalar_str(self)


I = Scalar(0, 1)


def simplify_parts(re: Fraction, im: Fraction):
    if im:
        return Scalar(re, im)
    if re.denominator == 1:
        return re.numerator
    return re


def simplify(c):
    """Collapse a coefficient to ``int`` / ``Fraction`` when it is real."""
    if isinstance(c, int):
        return c
    if isinstance(c, Scalar):
        return simplify_parts(c.re, c.im)
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return simplify(Fraction(c))
    raise TypeError(f"not an exact scalar: {c!r}")


def as_scalar(c) -> Scalar:
    if isinstance(c, Scalar):
        return c
    return Scalar(c, 0)


def div(a, b):
    """Exact quotient of two coefficients."""
    if b == 1:
        return a
    if b == -1:
        return -a
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    if isinstance(b, Scalar) or isinstance(a, Scalar):
        return simplify(as_scalar(a) * as_scalar(b).inverse())
    return simplify(Fraction(a) / Fraction(b))


def _frac_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def scalar_str(c) -> str:
    """Canonical text form ``a/b+c/d*i``; real values print without the ``i`` part."""
    s = as_scalar(c)
    if s.im == 0:
        return _frac_str(s.re)
    im = _frac_str(s.im)
    if s.re == 0:
        return f"{im}*i"
    sign = "+" if s.im > 0 else ""
    return f"{_frac_str(s.re)}{sign}{im}*i"


def parse_scalar(text: str):
    """Inverse of :func:`scalar_str`."""
    text = text.strip()
    if not text.endswith("*i"):
        return simplify(Fraction(text))
    body = text[:-2]
    # split at the last sign that is not a leading sign or part of an exponent
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    if cut <= 0:
        return simplify_parts(Fraction(0), Fraction(body))
    return simplify_parts(Fraction(body[:cut]), Fraction(body[cut:]))
