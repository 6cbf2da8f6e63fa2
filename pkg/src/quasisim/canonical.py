"""Admissible ``(theta, alpha, beta)`` triples, canonical subspaces and hyper-normalization."""

from __future__ import annotations

from dataclasses import dataclass

from .divisor import as_partition, valuation
from .jordan import COEFF_RANGE, MAX_RETRIES, JordanData, RetriesExhausted, as_rng, invariant_data, sample_maximal
from .model import CommutantElement, ModelPair, monomial, psi, shift
from .subspace import HypothesisViolated, Subspace, orbit_span, projection_exponents


class NotAdmissible(ValueError):
    pass


@dataclass(frozen=True)
class Triple:
    theta: tuple
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        theta = as_partition(self.theta, 2)
        alpha = as_partition(self.alpha, 2)
        beta = as_partition(self.beta, 2)
        n0, n1 = theta
        a0, a1 = alpha
        b0, b1 = beta
        if not (a0 <= n0 and a1 <= n1 and b0 <= n0 and b1 <= n1):
            raise ValueError(f"alpha {alpha} and beta {beta} must fit inside theta {theta}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def pair(self) -> ModelPair:
        return ModelPair(*self.theta)

    @property
    def data(self) -> JordanData:
        return JordanData(self.alpha, self.beta)

    def to_json(self) -> dict:
        return {"theta": list(self.theta), "alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, doc: dict) -> "Triple":
        return cls(tuple(doc["theta"]), tuple(doc["alpha"]), tuple(doc["beta"]))


def admissibility_failures(t: Triple) -> list:
    """Names of the violated conditions; empty when admissible."""
    (n0, n1), (a0, a1), (b0, b1) = t.theta, t.alpha, t.beta
    failed = []
    if n0 + n1 != a0 + a1 + b0 + b1:
        failed.append("n0+n1 = a0+a1+b0+b1")
    if n1 - b1 > a0:
        failed.append("n1-b1 <= a0")
    if b1 > min(n0 - a0, n1 - a1):
        failed.append("b1 <= min(n0-a0, n1-a1)")
    return failed


def admissible(t: Triple) -> bool:
    return not admissibility_failures(t)


def admissible_triples(p: ModelPair) -> list:
    out = []
    for a0 in range(p.n0 + 1):
        for a1 in range(min(a0, p.n1) + 1):
            for b0 in range(p.n0 + 1):
                for b1 in range(min(b0, p.n1) + 1):
                    t = Triple((p.n0, p.n1), (a0, a1), (b0, b1))
                    if admissible(t):
                        out.append(t)
    return out


def canonical_generators(t: Triple) -> tuple:
    (n0, n1), (a0, a1), (b0, b1) = t.theta, t.alpha, t.beta
    p = t.pair
    xi = p.join(monomial(n0 - a0, n0), monomial(b1, n1))
    eta = p.join((), monomial(n1 - a1, n1))
    return xi, eta


def canonical_subspace(t: Triple) -> Subspace:
    """Orbit span of ``xi = P z^(n0-a0) ⊕ P z^b1`` and ``eta = 0 ⊕ P z^(n1-a1)``."""
    failed = admissibility_failures(t)
    if failed:
        raise NotAdmissible(f"{t.to_json()} violates " + "; ".join(failed))
    p = t.pair
    N = orbit_span(canonical_generators(t), p)
    exps = projection_exponents(N)
    assert exps == (t.theta[0] - t.alpha[0], t.beta[1]), f"projection exponents {exps}"
    assert invariant_data(N) == t.data, f"invariant data {invariant_data(N)} != {t.data}"
    return N


def is_hyper_normal(p: ModelPair, m0: int, m1: int) -> bool:
    return m1 <= m0 and p.n1 - m1 <= p.n0 - m0


def _nonzero(rng) -> int:
    c = 0
    while c == 0:
        c = rng.randint(-COEFF_RANGE, COEFF_RANGE)
    return c


def hyper_normalize(M: Subspace, seed, retries: int = MAX_RETRIES) -> tuple:
    """Quasiaffinity symbol ``A`` and ``psi(A) M`` whose projections form a hyperinvariant subspace.

    Uses a maximal vector ``xi`` of ``T|M`` and a constant symbol
    ``[[a0, a1 z^(n0-n1)], [b0, b1]]`` chosen so that neither coordinate of
    ``A xi`` loses valuation and ``det A(0) != 0``.
    """
    p = M.pair
    if is_hyper_normal(p, *projection_exponents(M)):
        return CommutantElement.identity(p), M
    rng = as_rng(seed)
    n0, n1, gap = p.n0, p.n1, p.gap
    for _ in range(retries):
        xi0, xi1 = p.split(sample_maximal(M, rng))
        lifted = shift(xi1, gap, n0)
        want0 = min(valuation(xi0, n0), valuation(lifted, n0))
        want1 = min(valuation(xi0, n1), valuation(xi1, n1))
        a0, a1, b0, b1 = (_nonzero(rng) for _ in range(4))
        y0 = tuple(a0 * x + a1 * y for x, y in zip(xi0, lifted))
        y1 = tuple(b0 * x + b1 * y for x, y in zip(xi0[:n1], xi1))
        if valuation(y0, n0) != want0 or valuation(y1, n1) != want1:
            continue
        A = CommutantElement(p, (a0,), (a1,), (b0,), (b1,))
        if A.det_at_zero() == 0:
            continue
        Mn = M.image(psi(A))
        if is_hyper_normal(p, *projection_exponents(Mn)):
            return A, Mn
    raise RetriesExhausted(f"hyper-normalization failed after {retries} tries")


@dataclass(frozen=True)
class WeylReport:
    data: JordanData
    m0: int
    m1: int
    determinant: bool
    projections: bool
    restriction_bound: bool
    compression_bound: bool

    @property
    def ok(self) -> bool:
        return self.determinant and self.projections and self.restriction_bound and self.compression_bound

    def to_json(self) -> dict:
        return {
            **self.data.to_json(),
            "exponents": [self.m0, self.m1],
            "determinant_identity": self.determinant,
            "projection_identity": self.projections,
            "restriction_bound": self.restriction_bound,
            "compression_bound": self.compression_bound,
        }


def weyl_data(M: Subspace) -> WeylReport:
    """Check the four Weyl-type identities; the projections must already be hyper-normal."""
    p = M.pair
    m0, m1 = projection_exponents(M)
    if not is_hyper_normal(p, m0, m1):
        raise HypothesisViolated(f"projection exponents ({m0}, {m1}) are not hyper-normal; hyper_normalize first")
    data = invariant_data(M)
    (a0, a1), (b0, b1) = data.alpha, data.beta
    n0, n1 = p.n0, p.n1
    return WeylReport(
        data,
        m0,
        m1,
        determinant=a0 + a1 + b0 + b1 == n0 + n1,
        projections=m0 == n0 - a0 and m1 == b1,
        restriction_bound=n1 - b1 <= a0,
        compression_bound=b1 <= n0 - a0 and b1 <= n1 - a1,
    )
