"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Arithmetic that produces a Gaussian rational with zero imaginary part
collapses back to a plain ``Fraction``, so real computations never pay for
the complex representation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "GaussianRational",
    "ParseError",
    "conj",
    "format_scalar",
    "gaussian",
    "norm2",
    "parse_scalar",
    "to_sympy",
]


class ParseError(ValueError):
    """Raised on malformed scalar text or instance documents."""


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """``re + im*i`` with ``re``, ``im`` rational. Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return Fraction(x), Fraction(0)
        return NotImplemented

    def __add__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return p
        return gaussian(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return p
        return gaussian(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return p
        return gaussian(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return p
        a, b = self.re, self.im
        c, d = p
        return gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return p
        c, d = p
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("division by zero")
        a, b = self.re, self.im
        return gaussian((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return p
        return GaussianRational(*p) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return gaussian(self.re, -self.im)

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def gaussian(re, im=0):
    """Build a scalar, returning a plain ``Fraction`` when ``im == 0``."""
    im = _q(im)
    if im == 0:
        return _q(re)
    return GaussianRational(re, im)


def conj(x):
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def norm2(x) -> Fraction:
    """``|x|^2`` as an exact rational."""
    if isinstance(x, GaussianRational):
        return x.re * x.re + x.im * x.im
    x = _q(x)
    return x * x


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    if isinstance(x, GaussianRational):
        re_, im = x.re, x.im
        sign = "-" if im < 0 else "+"
        return f"{_fmt_q(re_)}{sign}{_fmt_q(abs(im))}i"
    return _fmt_q(_q(x))


_RAT = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^\s*({_RAT})(?:([+-])(\d+(?:/\d+)?)i)?\s*$")


def _parse_q(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text) -> Fraction | GaussianRational:
    """Parse ``-?digits(/digits)?`` optionally followed by ``(+|-)RATIONAL i``.

    Plain integers are accepted as well (JSON numbers).
    """
    if isinstance(text, bool):
        raise ParseError(f"not a scalar: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a scalar: {text!r}")
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ParseError(f"malformed scalar {text!r}")
    re_ = _parse_q(m.group(1))
    if m.group(2) is None:
        return re_
    im = _parse_q(m.group(3))
    if m.group(2) == "-":
        im = -im
    return gaussian(re_, im)


def to_sympy(x):
    import sympy

    if isinstance(x, GaussianRational):
        return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(
            x.im.numerator, x.im.denominator
        )
    x = _q(x)
    return sympy.Rational(x.numerator, x.denominator)
