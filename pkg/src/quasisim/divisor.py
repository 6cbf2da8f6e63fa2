"""Finite Blaschke divisors: inner functions stored as multisets of disc zeros.

Two divisors are equal exactly when the inner functions they stand for agree
up to a unimodular constant, so ``==`` is the equivalence of inner functions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import GaussianRational, conj, gaussian, norm2

__all__ = [
    "BlaschkeDivisor",
    "NotDivisible",
    "as_partition",
    "conjugate_partition",
    "valuation",
]


class NotDivisible(ArithmeticError):
    pass


def _sort_key(point):
    if isinstance(point, GaussianRational):
        return (point.re, point.im)
    return (Fraction(point), Fraction(0))


@dataclass(frozen=True)
class BlaschkeDivisor:
    """Zeros of a finite Blaschke product with multiplicities.

    ``zeros`` is kept as a sorted tuple of ``(point, multiplicity)``; use
    :meth:`from_points` or :meth:`from_mapping` rather than the raw
    constructor.
    """

    zeros: tuple = ()

    def __post_init__(self):
        seen = set()
        for point, mult in self.zeros:
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {mult!r}")
            if norm2(point) >= 1:
                raise ValueError(f"zero {point} is not inside the open unit disc")
            if point in seen:
                raise ValueError(f"duplicate zero {point}")
            seen.add(point)

    @classmethod
    def from_mapping(cls, zeros: Mapping) -> "BlaschkeDivisor":
        items = [(gaussian(*_split(p)), int(m)) for p, m in zeros.items() if m]
        items.sort(key=lambda pm: _sort_key(pm[0]))
        return cls(tuple(items))

    @classmethod
    def from_points(cls, points: Iterable) -> "BlaschkeDivisor":
        return cls.from_mapping(Counter(gaussian(*_split(p)) for p in points))

    @classmethod
    def z_power(cls, n: int) -> "BlaschkeDivisor":
        if n < 0:
            raise ValueError("negative exponent")
        return cls(((Fraction(0), n),)) if n else cls()

    @classmethod
    def one(cls) -> "BlaschkeDivisor":
        return cls()

    def counter(self) -> Counter:
        return Counter(dict(self.zeros))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.zeros)

    def order_at_zero(self) -> int:
        return self.counter().get(Fraction(0), 0)

    def is_one(self) -> bool:
        return not self.zeros

    def mul(self, other: "BlaschkeDivisor") -> "BlaschkeDivisor":
        return BlaschkeDivisor.from_mapping(self.counter() + other.counter())

    __mul__ = mul

    def divides(self, other: "BlaschkeDivisor") -> bool:
        mine, theirs = self.counter(), other.counter()
        return all(theirs[p] >= m for p, m in mine.items())

    def try_div(self, other: "BlaschkeDivisor") -> "BlaschkeDivisor":
        """Return ``c`` with ``other * c == self``; raise NotDivisible otherwise."""
        if not other.divides(self):
            raise NotDivisible(f"{other} does not divide {self}")
        return BlaschkeDivisor.from_mapping(self.counter() - other.counter())

    def gcd(self, other: "BlaschkeDivisor") -> "BlaschkeDivisor":
        return BlaschkeDivisor.from_mapping(self.counter() & other.counter())

    def lcm(self, other: "BlaschkeDivisor") -> "BlaschkeDivisor":
        return BlaschkeDivisor.from_mapping(self.counter() | other.counter())

    def tilde(self) -> "BlaschkeDivisor":
        """Divisor of ``u~(z) = conj(u(conj z))``: conjugate every zero."""
        return BlaschkeDivisor.from_mapping({conj(p): m for p, m in self.zeros})

    def __str__(self):
        if not self.zeros:
            return "1"
        return "{" + ", ".join(f"{p}:{m}" if m > 1 else f"{p}" for p, m in self.zeros) + "}"


def _split(p):
    if isinstance(p, GaussianRational):
        return p.re, p.im
    if isinstance(p, tuple):
        return p
    return (p, 0)


def mul(a: BlaschkeDivisor, b: BlaschkeDivisor) -> BlaschkeDivisor:
    return a.mul(b)


def try_div(a: BlaschkeDivisor, b: BlaschkeDivisor) -> BlaschkeDivisor:
    return a.try_div(b)


def gcd(a: BlaschkeDivisor, b: BlaschkeDivisor) -> BlaschkeDivisor:
    return a.gcd(b)


def lcm(a: BlaschkeDivisor, b: BlaschkeDivisor) -> BlaschkeDivisor:
    return a.lcm(b)


def tilde(d: BlaschkeDivisor) -> BlaschkeDivisor:
    return d.tilde()


def valuation(f, n: int) -> int:
    """Exponent of ``f ∧ z^n``: index of the first nonzero coefficient, capped at ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for k, c in enumerate(f):
        if k >= n:
            break
        if c != 0:
            return k
    return n


def as_partition(parts, length: int | None = None) -> tuple:
    """Validate a weakly decreasing sequence of nonnegative ints; optionally pad/trim to ``length``."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    if length is not None:
        if any(parts[length:]):
            raise ValueError(f"{parts} has more than {length} nonzero parts")
        parts = (parts + (0,) * length)[:length]
    return parts


def conjugate_partition(parts) -> tuple:
    parts = [p for p in parts if p]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))
