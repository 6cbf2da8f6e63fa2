"""Quasisimilarity of invariant subspaces of the two-block model.

On a finite-dimensional space a quasiaffinity is simply an invertible map,
so ``M ~ M'`` exactly when some invertible element of the commutant carries
``M`` onto ``M'``. The search runs over the linear space of commutant
symbols mapping ``M`` into ``M'``; invertibility is Zariski-open there, so
random points find a witness whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .canonical import Triple, canonical_subspace
from .jordan import as_rng, invariant_data
from .model import CommutantElement, commutant_basis, model_operator, psi, psi_apply
from .subspace import Subspace

SAMPLE_RANGE = 10_000  # |S| = 2 * SAMPLE_RANGE for the Schwartz-Zippel bound
DEFAULT_TRIALS = 64
EXACT_DIM_LIMIT = 8


class NotFound(LookupError):
    def __init__(self, reason: str, trials_used: int = 0, certificate: str = "probabilistic"):
        super().__init__(reason)
        self.reason = reason
        self.trials_used = trials_used
        self.certificate = certificate


@dataclass
class Verdict:
    kind: str  # "equivalent" | "inequivalent" | "falsification"
    witness: Optional[CommutantElement] = None
    reason: Optional[str] = None
    trials_used: int = 0
    certificate: str = "probabilistic"
    seed: Optional[int] = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == "equivalent" and self.witness is None:
            raise ValueError("equivalent verdict needs a witness")
        if self.kind != "equivalent" and not self.reason:
            raise ValueError("verdict needs a reason")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "reason": self.reason,
            "trials_used": self.trials_used,
            "certificate": self.certificate,
            "seed": self.seed,
        }


def _annihilator(Mp: Subspace) -> list:
    return linalg.nullspace(list(Mp.basis), Mp.pair.dim)


def constrained_commutant(M: Subspace, Mp: Subspace) -> list:
    """Basis of ``{A : psi(A) M ⊆ Mp}``."""
    if M.pair != Mp.pair:
        raise ValueError("subspaces live on different pairs")
    p = M.pair
    basis = commutant_basis(p)
    ann = _annihilator(Mp)
    images = [[psi_apply(B, b) for B in basis] for b in M.basis]
    rows = []
    for w in ann:
        for per_b in images:
            row = [sum((x * y for x, y in zip(w, img) if x and y), Fraction(0)) for img in per_b]
            if any(row):
                rows.append(row)
    sols = linalg.nullspace(rows, len(basis))
    return [CommutantElement.from_coefficients(p, s) for s in sols]


def _combine(basis, coeffs) -> CommutantElement:
    p = basis[0].pair
    total = [Fraction(0)] * (p.n0 + 3 * p.n1)
    for c, B in zip(coeffs, basis):
        if c:
            for i, x in enumerate(B.coefficients):
                if x:
                    total[i] += c * x
    return CommutantElement.from_coefficients(p, total)


def verify_witness(A: CommutantElement, M: Subspace, Mp: Subspace) -> bool:
    """``A`` is invertible, commutes with ``T`` and maps ``M`` onto ``Mp``."""
    X = psi(A)
    T = model_operator(A.pair)
    if linalg.matmul(X, T) != linalg.matmul(T, X):
        return False
    if linalg.rank(X) != A.pair.dim:
        return False
    return M.image(X) == Mp


def determinant_vanishes_identically(basis: list) -> bool:
    """Exact check that ``det psi(sum c_i B_i)`` is the zero polynomial in ``c``."""
    import sympy
    from sympy.polys.matrices import DomainMatrix

    from .scalars import to_sympy

    if not basis:
        return True
    p = basis[0].pair
    d = p.dim
    cs = sympy.symbols(f"c0:{len(basis)}")
    mats = [psi(B) for B in basis]
    rows = [
        [sum((c * to_sympy(m[r][s]) for c, m in zip(cs, mats) if m[r][s]), sympy.Integer(0)) for s in range(d)]
        for r in range(d)
    ]
    dm = DomainMatrix.from_list_sympy(d, d, rows)
    return dm.det() == dm.domain.zero


def find_quasisimilarity(M: Subspace, Mp: Subspace, seed=0, trials: int = DEFAULT_TRIALS, exact: bool = False):
    """Invertible commutant symbol ``A`` with ``psi(A) M = Mp``; raises NotFound.

    With ``exact`` and a constrained space of dimension at most 8, a failed
    search is settled by expanding the determinant symbolically.
    """
    return _search(M, Mp, as_rng(seed), trials, exact)[0]


def _search(M, Mp, rng, trials, exact):
    if M.pair != Mp.pair:
        raise ValueError("subspaces live on different pairs")
    p = M.pair
    if M.dim != Mp.dim:
        raise NotFound(f"dimension mismatch: {M.dim} vs {Mp.dim}", 0, "exact")
    if M == Mp:
        return CommutantElement.identity(p), 0
    basis = constrained_commutant(M, Mp)
    if not basis:
        raise NotFound("constrained commutant is zero", 0, "exact")
    for trial in range(1, trials + 1):
        coeffs = [rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE - 1) for _ in basis]
        A = _combine(basis, coeffs)
        if A.det_at_zero() != 0:
            A = A.normalized()
            if not verify_witness(A, M, Mp):
                raise AssertionError("sampled witness failed exact verification")
            return A, trial
    if exact and len(basis) <= EXACT_DIM_LIMIT:
        if determinant_vanishes_identically(basis):
            raise NotFound("determinant vanishes identically on the constrained commutant", trials, "exact")
        raise NotFound("search failed although the determinant is not identically zero", trials, "exact-nonzero")
    raise NotFound(f"no invertible element in {trials} trials", trials, "probabilistic")


def _difference(d1, d2) -> str:
    parts = []
    for name in ("alpha", "beta"):
        x, y = getattr(d1, name), getattr(d2, name)
        if x != y:
            parts.append(f"{name}: {x} vs {y}")
    return "; ".join(parts)


def classify(M: Subspace, Mp: Subspace, seed=0, trials: int = DEFAULT_TRIALS, exact_certificate: bool = False) -> Verdict:
    d1, d2 = invariant_data(M), invariant_data(Mp)
    seed_value = seed if isinstance(seed, int) else None
    rng = as_rng(seed)
    if d1 != d2:
        reason = _difference(d1, d2)
        try:
            A, used = _search(M, Mp, rng, trials, exact_certificate)
        except NotFound as nf:
            if nf.certificate == "exact-nonzero":
                return Verdict("falsification", None, f"{reason}; but an invertible element exists", nf.trials_used, "exact", seed_value)
            return Verdict("inequivalent", None, reason, nf.trials_used, nf.certificate, seed_value)
        return Verdict("falsification", A, f"{reason}; but witness found", used, "exact", seed_value)
    try:
        A, used = _search(M, Mp, rng, trials, False)
    except NotFound as nf:
        return Verdict("falsification", None, f"equal invariants but {nf.reason}", nf.trials_used, nf.certificate, seed_value)
    return Verdict("equivalent", A, None, used, "exact", seed_value)


def reduce_to_canonical(M: Subspace, seed=0, trials: int = DEFAULT_TRIALS) -> tuple:
    data = invariant_data(M)
    t = Triple((M.pair.n0, M.pair.n1), data.alpha, data.beta)
    N = canonical_subspace(t)
    return classify(M, N, seed, trials), N
