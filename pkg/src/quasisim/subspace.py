"""Invariant subspaces of the model operator, held in a canonical exact basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .model import (
    ModelPair,
    ModelVector,
    apply_T,
    apply_T_adjoint,
    poly_calculus,
)
from .scalars import conj

ZERO = Fraction(0)
ONE = Fraction(1)


class NotInvariant(ValueError):
    pass


class NotCyclic(ValueError):
    pass


class HypothesisViolated(ValueError):
    pass


def _vec(v, p: ModelPair) -> tuple:
    if isinstance(v, ModelVector):
        if v.pair != p:
            raise ValueError("vector belongs to a different pair")
        return v.flat
    v = tuple(v)
    if len(v) != p.dim:
        raise ValueError(f"vector length {len(v)} != {p.dim}")
    return v


def echelon(vectors, d: int) -> tuple:
    rows, _ = linalg.rref(vectors, d)
    return tuple(rows)


@dataclass(frozen=True)
class Subspace:
    """Span of ``basis`` (flat vectors in reduced echelon form) inside the pair's space.

    Construct through :func:`canonical_basis`, :func:`orbit_span` or
    :meth:`from_vectors`; the basis is then unique for the span, so ``==`` is
    equality of subspaces.
    """

    pair: ModelPair
    basis: tuple

    @classmethod
    def from_vectors(cls, p: ModelPair, vectors) -> "Subspace":
        return cls(p, echelon([_vec(v, p) for v in vectors], p.dim))

    @classmethod
    def whole(cls, p: ModelPair) -> "Subspace":
        return cls.from_vectors(p, linalg.identity(p.dim))

    @classmethod
    def zero(cls, p: ModelPair) -> "Subspace":
        return cls(p, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list:
        return [next(i for i, x in enumerate(b) if x != 0) for b in self.basis]

    def matrix(self) -> list:
        return linalg.columns(self.basis, self.pair.dim)

    def contains(self, v) -> bool:
        v = _vec(v, self.pair)
        return linalg.rank(list(self.basis) + [v]) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def coordinates(self, v) -> tuple:
        """Coefficients of ``v`` in the echelon basis (``v`` must lie in the span)."""
        v = _vec(v, self.pair)
        coords = tuple(v[pc] for pc in self.pivots)
        recon = [sum((c * b[i] for c, b in zip(coords, self.basis)), ZERO) for i in range(self.pair.dim)]
        if tuple(recon) != v:
            raise ValueError("vector is not in the subspace")
        return coords

    def is_invariant(self) -> bool:
        return all(self.contains(apply_T(self.pair, b)) for b in self.basis)

    def image(self, X) -> "Subspace":
        """``X M`` for a square matrix ``X`` on the ambient space."""
        return Subspace.from_vectors(self.pair, [linalg.matvec(X, b) for b in self.basis])

    def generators_json(self) -> list:
        return [ModelVector.from_flat(self.pair, b).to_json() for b in self.basis]

    def label(self) -> str:
        return " , ".join(_vector_label(self.pair, b) for b in self.basis) or "0"


def _vector_label(p: ModelPair, v) -> str:
    terms = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        name = f"e{i}" if i < p.n0 else f"f{i - p.n0}"
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"({c}){name}")
    return "+".join(terms).replace("+-", "-") or "0"


def canonical_basis(vectors, p: ModelPair) -> Subspace:
    M = Subspace.from_vectors(p, vectors)
    if not M.is_invariant():
        raise NotInvariant(f"span of {[list(map(str, _vec(v, p))) for v in vectors]} is not T-invariant")
    return M


def orbit_span(generators, p: ModelPair) -> Subspace:
    """Smallest invariant subspace containing ``generators``."""
    rows = [_vec(g, p) for g in generators]
    current = echelon(rows, p.dim)
    while True:
        grown = echelon(list(current) + [apply_T(p, b) for b in current], p.dim)
        if len(grown) == len(current):
            return Subspace(p, grown)
        current = grown


def coordinate_projection(M: Subspace, j: int) -> int:
    """Exponent ``m_j`` with ``P_j M = span{e_{m_j}, ..., e_{n_j - 1}}``."""
    p = M.pair
    n = p.n0 if j == 0 else p.n1
    lo = 0 if j == 0 else p.n0
    projected = [b[lo:lo + n] for b in M.basis]
    m = n
    for v in projected:
        for k, c in enumerate(v):
            if c != 0:
                m = min(m, k)
                break
    # chain form: the projection must be all of span{e_m..e_{n-1}}
    assert linalg.rank(projected) == n - m if projected else m == n, "projection is not of chain form"
    return m


def projection_exponents(M: Subspace) -> tuple:
    return coordinate_projection(M, 0), coordinate_projection(M, 1)


def ortho_complement(M: Subspace) -> tuple:
    """Echelon basis of ``M⊥`` for ``<x, y> = sum x_k conj(y_k)``."""
    d = M.pair.dim
    rows = [[conj(x) for x in b] for b in M.basis]
    return echelon(linalg.nullspace(rows, d), d)


def gram(vectors) -> list:
    return [[linalg.dot(v, w) for v in vectors] for w in vectors]


def restriction(M: Subspace) -> list:
    """Matrix of ``T|M`` in the echelon basis of ``M``."""
    p = M.pair
    piv = M.pivots
    cols = []
    for b in M.basis:
        tb = apply_T(p, b)
        cols.append(tuple(tb[pc] for pc in piv))
    return linalg.columns(cols, M.dim)


def _compress(basis, p: ModelPair, op) -> list:
    """Matrix of ``P_V op | V`` in the (non-orthonormal) basis of ``V``."""
    if not basis:
        return []
    G = gram(basis)  # G[i][j] = <b_j, b_i>
    cols = []
    for b in basis:
        w = op(p, b)
        rhs = tuple(linalg.dot(w, bi) for bi in basis)
        cols.append(linalg.solve(G, rhs))
    return linalg.columns(cols, len(basis))


def compression(M: Subspace) -> list:
    """Matrix of ``P_{M⊥} T | M⊥`` in the :func:`ortho_complement` basis."""
    return _compress(ortho_complement(M), M.pair, apply_T)


def restriction_adjoint(M: Subspace) -> list:
    """Matrix of ``(T|M)* = P_M T* | M`` in the echelon basis of ``M``."""
    return _compress(M.basis, M.pair, apply_T_adjoint)


def project(basis, v) -> tuple:
    """Orthogonal projection of ``v`` onto the span of ``basis``."""
    if not basis:
        return tuple(ZERO for _ in v)
    G = gram(basis)
    coeffs = linalg.solve(G, tuple(linalg.dot(v, bi) for bi in basis))
    return tuple(sum((c * b[i] for c, b in zip(coeffs, basis)), ZERO) for i in range(len(v)))


def join(M: Subspace, Mp: Subspace) -> Subspace:
    _same_pair(M, Mp)
    return Subspace.from_vectors(M.pair, list(M.basis) + list(Mp.basis))


def intersect(M: Subspace, Mp: Subspace) -> Subspace:
    _same_pair(M, Mp)
    p = M.pair
    if not M.basis or not Mp.basis:
        return Subspace.zero(p)
    # solve sum x_i b_i - sum y_j b'_j = 0
    k = M.dim
    stacked = linalg.columns(list(M.basis) + [tuple(-x for x in b) for b in Mp.basis], p.dim)
    vecs = []
    for sol in linalg.nullspace(stacked, k + Mp.dim):
        vecs.append(tuple(sum((sol[i] * M.basis[i][r] for i in range(k)), ZERO) for r in range(p.dim)))
    return Subspace.from_vectors(p, vecs)


def _same_pair(M: Subspace, Mp: Subspace):
    if M.pair != Mp.pair:
        raise ValueError(f"subspaces live on different pairs {M.pair} and {Mp.pair}")


def adjoint_orbit(ambient: Subspace, k) -> tuple:
    """Echelon basis of ``V{(T|ambient)*^n k}`` where ``(T|ambient)* = P_ambient T*``."""
    p = ambient.pair
    vecs = [tuple(k)]
    span = echelon(vecs, p.dim)
    v = tuple(k)
    while True:
        v = project(ambient.basis, apply_T_adjoint(p, v))
        grown = echelon(list(span) + [v], p.dim)
        if len(grown) == len(span):
            return span
        span = grown


def split(ambient: Subspace, K: Subspace, k) -> tuple:
    """Splitting principle inside ``ambient``.

    Returns ``(K', L)`` with ``K'`` the orbit of ``k`` under the adjoint of
    ``T|ambient`` and ``L = ambient ⊖ K'``; then ``ambient = K ∨ L``,
    ``K ∩ L = 0`` and ``T|L`` is a single block of the second size of
    ``T|ambient``. All three conclusions are checked before returning.
    """
    from .jordan import nilpotent_jordan_model

    p = ambient.pair
    _same_pair(ambient, K)
    k = _vec(k, p)
    if not ambient.contains_subspace(K):
        raise HypothesisViolated("K is not contained in the ambient subspace")
    amb_model = nilpotent_jordan_model(restriction(ambient))
    k_model = nilpotent_jordan_model(restriction(K))
    top = amb_model[0] if amb_model else 0
    if len([x for x in k_model if x]) != 1 or k_model[0] != top:
        raise HypothesisViolated(f"T|K has model {k_model}, need a single block of size {top}")
    if not K.contains(k):
        raise NotCyclic("k is not in K")
    if len(adjoint_orbit(K, k)) != K.dim:
        raise NotCyclic("k is not cyclic for (T|K)*")

    kprime_basis = adjoint_orbit(ambient, k)
    Kprime = Subspace(p, kprime_basis)
    # L = {x in ambient : <x, w> = 0 for w in K'}
    conds = [[linalg.dot(b, w) for b in ambient.basis] for w in kprime_basis]
    sols = linalg.nullspace(conds, ambient.dim)
    L = Subspace.from_vectors(p, [linalg.matvec(ambient.matrix(), s) for s in sols])

    second = amb_model[1] if len(amb_model) > 1 else 0
    l_model = [x for x in nilpotent_jordan_model(restriction(L)) if x]
    if join(K, L) != ambient or intersect(K, L).dim != 0 or l_model != ([second] if second else []):
        raise AssertionError("splitting conclusions failed")
    if not L.is_invariant():
        raise AssertionError("L is not invariant")
    return Kprime, L


def hyperinvariant_descriptors(p: ModelPair) -> list:
    return [
        (p0, p1)
        for p0 in range(p.n0 + 1)
        for p1 in range(p.n1 + 1)
        if p1 <= p0 and p.n1 - p1 <= p.n0 - p0
    ]


def block_subspace(p: ModelPair, p0: int, p1: int) -> Subspace:
    """``span{e_p0..e_{n0-1}} ⊕ span{f_p1..f_{n1-1}}``."""
    return Subspace.from_vectors(p, [p.e(k) for k in range(p0, p.n0)] + [p.f(k) for k in range(p1, p.n1)])


def hyperinvariant_subspaces(p: ModelPair) -> list:
    return [block_subspace(p, p0, p1) for p0, p1 in hyperinvariant_descriptors(p)]


def multiplicity_one_subspace(n: int, t: int) -> Subspace:
    """The unique invariant subspace of ``S(z^n)`` on which ``T`` has model ``S(z^t)``: ``ker T^t``."""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    p = ModelPair(n, 0)
    M = Subspace.from_vectors(p, [p.e(k) for k in range(n - t, n)])
    kernel = Subspace.from_vectors(p, linalg.nullspace(poly_calculus(_z(t), p), n))
    rng = Subspace.from_vectors(p, linalg.transpose(poly_calculus(_z(n - t), p)))
    assert M == kernel == rng
    return M


def _z(k: int) -> tuple:
    return (ZERO,) * k + (ONE,)
