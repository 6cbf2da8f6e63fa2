"""Jordan models of nilpotent matrices and the invariant datum of a subspace."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .divisor import as_partition, conjugate_partition, valuation
from .model import ModelPair, apply_T, model_operator
from .subspace import Subspace, compression, restriction, restriction_adjoint

COEFF_RANGE = 9
MAX_RETRIES = 64

# running tally of determinant-identity checks, one per computed datum
identity_checks = Counter()


class NotNilpotent(ValueError):
    pass


class RetriesExhausted(RuntimeError):
    pass


class DeterminantIdentityViolation(AssertionError):
    pass


def as_rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def nilpotent_jordan_model(A) -> tuple:
    """Block sizes of the Jordan form of a nilpotent matrix, largest first.

    ``#{j : λ_j >= k} = rank(A^(k-1)) - rank(A^k)``.
    """
    d = len(A)
    ranks = [d]
    power = linalg.identity(d)
    for _ in range(d):
        power = linalg.matmul(power, A)
        ranks.append(linalg.rank(power))
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise NotNilpotent("matrix is not nilpotent")
    counts = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    return conjugate_partition(counts)


def multiplicity(A) -> int:
    return len(nilpotent_jordan_model(A))


@dataclass(frozen=True)
class JordanData:
    """Models of the restriction (``alpha``) and the compression (``beta``), two parts each."""

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_partition(self.alpha, 2))
        object.__setattr__(self, "beta", as_partition(self.beta, 2))

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, doc: dict) -> "JordanData":
        return cls(tuple(doc["alpha"]), tuple(doc["beta"]))


@lru_cache(maxsize=65536)
def _models(M: Subspace) -> tuple:
    return nilpotent_jordan_model(restriction(M)), nilpotent_jordan_model(compression(M))


def invariant_data(M: Subspace) -> JordanData:
    """Jordan models of ``T|M`` and of the compression to ``M⊥``.

    The determinant identity is checked on every call (the rank computations are cached).
    """
    alpha, beta = _models(M)
    p = M.pair
    identity_checks["calls"] += 1
    if sum(alpha) + sum(beta) != p.n0 + p.n1:
        identity_checks["violations"] += 1
        raise DeterminantIdentityViolation(f"|alpha|+|beta| != n0+n1 for {M}: {alpha}, {beta}")
    if len(alpha) > 2 or len(beta) > 2:
        raise AssertionError(f"more than two blocks: {alpha}, {beta}")
    return JordanData(alpha, beta)


def minimal_function(x, p: ModelPair) -> int:
    """Least ``k`` with ``T^k x = 0``."""
    v = tuple(x.flat if hasattr(x, "flat") else x)
    k = 0
    while any(c != 0 for c in v):
        v = apply_T(p, v)
        k += 1
    return k


def _combo(basis, coeffs) -> tuple:
    d = len(basis[0])
    return tuple(sum((c * b[i] for c, b in zip(coeffs, basis) if c), linalg.ZERO) for i in range(d))


def sample_maximal(M: Subspace, seed, retries: int = MAX_RETRIES) -> tuple:
    """A vector of ``M`` whose minimal function is that of ``T|M``."""
    if M.dim == 0:
        raise ValueError("zero subspace has no maximal vector")
    rng = as_rng(seed)
    target = invariant_data(M).alpha[0]
    for _ in range(retries):
        coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in M.basis]
        x = _combo(M.basis, coeffs)
        if minimal_function(x, M.pair) == target:
            return x
    raise RetriesExhausted(f"no maximal vector found in {retries} tries")


def generic_combination(fs, n: int, seed, retries: int = MAX_RETRIES) -> list:
    """Scalars ``a_j`` with ``valuation(sum a_j f_j, n) = min_j valuation(f_j, n)``."""
    fs = [tuple(f) for f in fs]
    if not fs:
        raise ValueError("need at least one polynomial")
    rng = as_rng(seed)
    target = min(valuation(f, n) for f in fs)
    length = max(len(f) for f in fs)
    for _ in range(retries):
        a = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in fs]
        total = [sum((aj * f[k] for aj, f in zip(a, fs) if k < len(f)), linalg.ZERO) for k in range(length)]
        if valuation(total, n) == target:
            return a
    raise RetriesExhausted(f"no generic combination found in {retries} tries")


def adjoint_model_check(p: ModelPair) -> bool:
    T = model_operator(p)
    model = nilpotent_jordan_model(linalg.conj_transpose(T))
    return as_partition(model, 2) == (p.n0, p.n1)


def restriction_adjoint_check(M: Subspace) -> bool:
    """The adjoint of ``T|M`` has the same (conjugated) model as ``T|M``."""
    return nilpotent_jordan_model(restriction_adjoint(M)) == nilpotent_jordan_model(restriction(M))
