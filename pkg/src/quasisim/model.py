"""Matrix realization of the two-block model ``T = S(z^n0) ⊕ S(z^n1)``.

Coordinates are the monomial basis ``e_0..e_{n0-1}, f_0..f_{n1-1}`` and
``T`` is the lower shift on each block. A vector is a flat tuple of length
``n0 + n1``; polynomials are coefficient tuples, lowest degree first.

Every operator commuting with ``T`` is ``psi(A)`` for a 2x2 polynomial
symbol ``A`` whose upper-right entry is divisible by ``z^(n0-n1)``; the
symbol is stored reduced modulo the kernel of ``psi`` so that symbol equality
is operator equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .scalars import format_scalar, parse_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


# polynomials ---------------------------------------------------------------

def poly(coeffs: Sequence, n: int) -> tuple:
    """Pad or truncate ``coeffs`` to exactly ``n`` coefficients (i.e. reduce mod z^n)."""
    coeffs = tuple(coeffs)[:n]
    return coeffs + (ZERO,) * (n - len(coeffs))


def poly_add(*ps) -> tuple:
    n = max((len(p) for p in ps), default=0)
    return tuple(sum((p[k] for p in ps if k < len(p)), ZERO) for k in range(n))


def poly_scale(c, p) -> tuple:
    return tuple(c * x for x in p)


def poly_mul(p, q, n: int) -> tuple:
    """``p*q mod z^n``."""
    out = [ZERO] * n
    for i, a in enumerate(p):
        if i >= n:
            break
        if not a:
            continue
        for j, b in enumerate(q):
            if i + j >= n:
                break
            if b:
                out[i + j] += a * b
    return tuple(out)


def shift(p, k: int, n: int) -> tuple:
    """``z^k * p mod z^n``."""
    return poly((ZERO,) * k + tuple(p), n)


def monomial(k: int, n: int) -> tuple:
    """``P_{H(z^n)} z^k``: the unit vector ``e_k`` if ``k < n`` else zero."""
    return tuple(ONE if i == k else ZERO for i in range(n))


# model pair and vectors ----------------------------------------------------

@dataclass(frozen=True, order=True)
class ModelPair:
    n0: int
    n1: int

    def __post_init__(self):
        if not (isinstance(self.n0, int) and isinstance(self.n1, int)):
            raise TypeError("exponents must be integers")
        if self.n1 < 0 or self.n0 < self.n1:
            raise ValueError(f"need n0 >= n1 >= 0, got ({self.n0}, {self.n1})")
        if self.n0 + self.n1 < 1:
            raise ValueError("total dimension must be at least 1")

    @property
    def dim(self) -> int:
        return self.n0 + self.n1

    @property
    def gap(self) -> int:
        return self.n0 - self.n1

    def split(self, v) -> tuple:
        return tuple(v[: self.n0]), tuple(v[self.n0:])

    def join(self, h0, h1) -> tuple:
        return poly(h0, self.n0) + poly(h1, self.n1)

    def e(self, k: int) -> tuple:
        return self.join(monomial(k, self.n0), ())

    def f(self, k: int) -> tuple:
        return self.join((), monomial(k, self.n1))

    def zero(self) -> tuple:
        return (ZERO,) * self.dim

    def to_list(self) -> list:
        return [self.n0, self.n1]


def all_pairs(max_dim: int, min_dim: int = 1):
    """Every ModelPair with ``min_dim <= n0 + n1 <= max_dim``, in lexicographic order."""
    out = []
    for d in range(min_dim, max_dim + 1):
        for n1 in range(0, d // 2 + 1):
            out.append(ModelPair(d - n1, n1))
    return sorted(out)


@dataclass(frozen=True)
class ModelVector:
    """``h0 ⊕ h1`` with ``deg h0 < n0`` and ``deg h1 < n1``."""

    pair: ModelPair
    h0: tuple
    h1: tuple

    def __post_init__(self):
        if len(self.h0) > self.pair.n0 and any(self.h0[self.pair.n0:]):
            raise ValueError(f"h0 has degree >= n0 = {self.pair.n0}")
        if len(self.h1) > self.pair.n1 and any(self.h1[self.pair.n1:]):
            raise ValueError(f"h1 has degree >= n1 = {self.pair.n1}")
        object.__setattr__(self, "h0", poly(self.h0, self.pair.n0))
        object.__setattr__(self, "h1", poly(self.h1, self.pair.n1))

    @classmethod
    def from_flat(cls, pair: ModelPair, v) -> "ModelVector":
        h0, h1 = pair.split(v)
        return cls(pair, h0, h1)

    @property
    def flat(self) -> tuple:
        return self.h0 + self.h1

    def to_json(self) -> dict:
        return {"h0": [format_scalar(c) for c in self.h0], "h1": [format_scalar(c) for c in self.h1]}


# operators -----------------------------------------------------------------

def jordan_block_matrix(n: int) -> list:
    if n < 1:
        raise ValueError("block size must be at least 1")
    m = linalg.zeros(n, n)
    for k in range(n - 1):
        m[k + 1][k] = ONE
    return m


def model_operator(p: ModelPair) -> list:
    d = p.dim
    m = linalg.zeros(d, d)
    for k in range(p.n0 - 1):
        m[k + 1][k] = ONE
    for k in range(p.n1 - 1):
        m[p.n0 + k + 1][p.n0 + k] = ONE
    return m


def apply_T(p: ModelPair, v) -> tuple:
    h0, h1 = p.split(v)
    return shift(h0, 1, p.n0) + shift(h1, 1, p.n1)


def apply_T_adjoint(p: ModelPair, v) -> tuple:
    """``T*``: the backward shift on each block."""
    h0, h1 = p.split(v)
    return poly(h0[1:], p.n0) + poly(h1[1:], p.n1)


def poly_calculus(u, p: ModelPair) -> list:
    """Matrix of ``u(T)``."""
    d = p.dim
    cols = []
    for j in range(d):
        h0, h1 = p.split(tuple(ONE if i == j else ZERO for i in range(d)))
        cols.append(poly_mul(u, h0, p.n0) + poly_mul(u, h1, p.n1))
    return linalg.columns(cols, d)


# commutant symbols ---------------------------------------------------------

@dataclass(frozen=True)
class CommutantElement:
    """Reduced symbol ``[[a00, z^(n0-n1) a01low], [a10, a11]]`` for the pair ``pair``."""

    pair: ModelPair
    a00: tuple
    a01low: tuple
    a10: tuple
    a11: tuple

    def __post_init__(self):
        n0, n1 = self.pair.n0, self.pair.n1
        object.__setattr__(self, "a00", poly(self.a00, n0))
        object.__setattr__(self, "a01low", poly(self.a01low, n1))
        object.__setattr__(self, "a10", poly(self.a10, n1))
        object.__setattr__(self, "a11", poly(self.a11, n1))

    @classmethod
    def from_symbol(cls, p: ModelPair, a00, a01, a10, a11) -> "CommutantElement":
        """Reduce an unreduced symbol; ``a01`` must be divisible by ``z^(n0-n1)`` modulo ``z^n0``."""
        a01 = poly(a01, p.n0)
        if any(a01[: p.gap]):
            raise ValueError("upper-right entry is not divisible by z^(n0-n1)")
        return cls(p, poly(a00, p.n0), a01[p.gap:], poly(a10, p.n1), poly(a11, p.n1))

    @classmethod
    def identity(cls, p: ModelPair) -> "CommutantElement":
        return cls(p, (ONE,), (), (), (ONE,))

    @classmethod
    def zero(cls, p: ModelPair) -> "CommutantElement":
        return cls(p, (), (), (), ())

    @property
    def coefficients(self) -> tuple:
        return self.a00 + self.a01low + self.a10 + self.a11

    @classmethod
    def from_coefficients(cls, p: ModelPair, coeffs) -> "CommutantElement":
        coeffs = tuple(coeffs)
        n0, n1 = p.n0, p.n1
        return cls(p, coeffs[:n0], coeffs[n0:n0 + n1], coeffs[n0 + n1:n0 + 2 * n1], coeffs[n0 + 2 * n1:])

    @property
    def a01(self) -> tuple:
        return shift(self.a01low, self.pair.gap, self.pair.n0)

    def __add__(self, other):
        return CommutantElement.from_coefficients(
            self.pair, (x + y for x, y in zip(self.coefficients, other.coefficients))
        )

    def scale(self, c) -> "CommutantElement":
        return CommutantElement.from_coefficients(self.pair, (c * x for x in self.coefficients))

    def __mul__(self, other: "CommutantElement") -> "CommutantElement":
        """Symbol product followed by reduction modulo the kernel of psi."""
        p = self.pair
        n0, n1 = p.n0, p.n1
        a01, b01 = self.a01, other.a01
        c00 = poly_add(poly_mul(self.a00, other.a00, n0), poly_mul(a01, other.a10, n0))
        c01 = poly_add(poly_mul(self.a00, b01, n0), poly_mul(a01, other.a11, n0))
        c10 = poly_add(poly_mul(self.a10, other.a00, n1), poly_mul(self.a11, other.a10, n1))
        c11 = poly_add(poly_mul(self.a10, b01, n1), poly_mul(self.a11, other.a11, n1))
        return CommutantElement.from_symbol(p, c00, c01, c10, c11)

    def det(self) -> tuple:
        """``det A mod z^n0``.

        With ``n1 == 0`` the lower row is vacuous and ``a11`` is represented
        by 1, so the determinant is ``a00``.
        """
        p = self.pair
        if p.n1 == 0:
            return self.a00
        prod = poly_mul(self.a00, self.a11, p.n0)
        cross = poly_mul(self.a01, self.a10, p.n0)
        return tuple(x - y for x, y in zip(prod, cross))

    def det_at_zero(self):
        p = self.pair
        if p.n1 == 0:
            return self.a00[0]
        v = self.a00[0] * self.a11[0]
        if p.gap == 0:
            v -= self.a01low[0] * self.a10[0]
        return v

    def normalized(self) -> "CommutantElement":
        """Scale so the first nonzero coefficient is 1."""
        lead = next((c for c in self.coefficients if c != 0), None)
        if lead is None or lead == 1:
            return self
        return self.scale(ONE / lead)

    def to_json(self) -> dict:
        return {
            "a00": [format_scalar(c) for c in self.a00],
            "a01low": [format_scalar(c) for c in self.a01low],
            "a10": [format_scalar(c) for c in self.a10],
            "a11": [format_scalar(c) for c in self.a11],
        }

    @classmethod
    def from_json(cls, p: ModelPair, doc: dict) -> "CommutantElement":
        bounds = {"a00": p.n0, "a01low": p.n1, "a10": p.n1, "a11": p.n1}
        parts = {}
        for key, bound in bounds.items():
            coeffs = [parse_scalar(c) for c in doc.get(key, [])]
            if any(coeffs[bound:]):
                raise ValueError(f"{key} exceeds its degree bound {bound}")
            parts[key] = coeffs
        return cls(p, **parts)


def commutant_basis(p: ModelPair) -> list:
    """Monomial basis of the reduced symbols; ``n0 + 3 n1`` elements."""
    d = p.n0 + 3 * p.n1
    return [CommutantElement.from_coefficients(p, (ONE if i == j else ZERO for i in range(d))) for j in range(d)]


def psi_apply(A: CommutantElement, v) -> tuple:
    p = A.pair
    g, f = p.split(v)
    top = poly_add(poly_mul(A.a00, g, p.n0), shift(poly_mul(A.a01low, f, p.n1), p.gap, p.n0))
    bottom = poly_add(poly_mul(A.a10, g, p.n1), poly_mul(A.a11, f, p.n1))
    return poly(top, p.n0) + poly(bottom, p.n1)


def psi(A: CommutantElement, p: ModelPair | None = None) -> list:
    """Matrix of ``P_H A | H``."""
    p = p or A.pair
    if p != A.pair:
        raise ValueError("symbol belongs to a different pair")
    d = p.dim
    cols = [psi_apply(A, tuple(ONE if i == j else ZERO for i in range(d))) for j in range(d)]
    return linalg.columns(cols, d)


def adjugate(A: CommutantElement, p: ModelPair | None = None):
    """Algebraic adjoint ``A'`` (``a'01 = -a01``) and ``u = det A mod z^n0``.

    ``psi(A) psi(A') = psi(A') psi(A) = u(T)``.
    """
    p = p or A.pair
    if p.n1 == 0:
        return CommutantElement.identity(p), A.det()
    Ap = CommutantElement(
        p,
        poly(A.a11, p.n0),
        tuple(-c for c in A.a01low),
        tuple(-c for c in A.a10),
        poly(A.a00, p.n1),
    )
    return Ap, A.det()


def is_quasiaffinity(A: CommutantElement, p: ModelPair | None = None) -> bool:
    """``det A ∧ z^n0 ≡ 1``, i.e. ``(det A)(0) != 0``."""
    return A.det_at_zero() != 0


def commutator_kernel_dim(p: ModelPair) -> int:
    """Dimension of ``{X : XT = TX}`` by solving the linear system directly."""
    d = p.dim
    T = model_operator(p)
    rows = []
    # unknown X[i][j] at index i*d + j; (XT - TX)[r][c] = sum_k X[r][k]T[k][c] - T[r][k]X[k][c]
    for r in range(d):
        for c in range(d):
            row = [ZERO] * (d * d)
            for k in range(d):
                if T[k][c]:
                    row[r * d + k] += T[k][c]
                if T[r][k]:
                    row[k * d + c] -= T[r][k]
            rows.append(row)
    return d * d - linalg.rank(rows)
