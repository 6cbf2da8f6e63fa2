"""Seeded corpora of invariant subspaces and subspace pairs."""

from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction

from .canonical import admissible_triples, canonical_subspace
from .jordan import COEFF_RANGE, invariant_data
from .model import CommutantElement, ModelPair, is_quasiaffinity, psi
from .subspace import Subspace, block_subspace, orbit_span


def pair_rng(seed: int, p: ModelPair, tag: str = "") -> random.Random:
    # str seeds hash through sha512, so streams are stable across runs and platforms
    return random.Random(f"{seed}:{p.n0}:{p.n1}:{tag}")


def random_vector(p: ModelPair, rng: random.Random) -> tuple:
    density = rng.choice((0.25, 0.5, 1.0))
    return tuple(
        Fraction(rng.randint(-COEFF_RANGE, COEFF_RANGE)) if rng.random() < density else Fraction(0)
        for _ in range(p.dim)
    )


def random_subspace(p: ModelPair, rng: random.Random) -> Subspace:
    count = rng.choice((1, 2))
    return orbit_span([random_vector(p, rng) for _ in range(count)], p)


def random_symbol(p: ModelPair, rng: random.Random, density: float | None = None) -> CommutantElement:
    if density is None:
        density = rng.choice((0.3, 0.6, 1.0))
    d = p.n0 + 3 * p.n1
    coeffs = [
        Fraction(rng.randint(-COEFF_RANGE, COEFF_RANGE)) if rng.random() < density else Fraction(0) for _ in range(d)
    ]
    return CommutantElement.from_coefficients(p, coeffs)


def random_quasiaffinity(p: ModelPair, rng: random.Random) -> CommutantElement:
    while True:
        A = random_symbol(p, rng)
        if is_quasiaffinity(A):
            return A


def structured_subspaces(p: ModelPair) -> list:
    """Coordinate (block) subspaces and canonical subspaces of every admissible triple."""
    out = []
    for p0 in range(p.n0 + 1):
        for p1 in range(p.n1 + 1):
            out.append(block_subspace(p, p0, p1))
    out.extend(canonical_subspace(t) for t in admissible_triples(p))
    return _dedupe(out)


def _dedupe(subspaces) -> list:
    seen = set()
    out = []
    for M in subspaces:
        if M not in seen:
            seen.add(M)
            out.append(M)
    return out


def subspace_corpus(p: ModelPair, seed: int, budget: int) -> list:
    """Structured families followed by random orbit spans, ``max(budget, #structured)`` in total."""
    rng = pair_rng(seed, p, "subspaces")
    out = structured_subspaces(p)
    attempts = 0
    while len(out) < budget and attempts < 20 * budget:
        attempts += 1
        M = random_subspace(p, rng)
        if rng.random() < 0.25:
            M = M.image(psi(random_quasiaffinity(p, rng)))
        out.append(M)
    return out


def pair_corpus(p: ModelPair, seed: int, budget: int) -> list:
    """``budget`` subspace pairs: same-datum pairs, arbitrary pairs and quasiaffine images."""
    rng = pair_rng(seed, p, "pairs")
    subs = subspace_corpus(p, seed, budget)
    buckets = defaultdict(list)
    for M in subs:
        buckets[invariant_data(M)].append(M)
    multi = [b for b in buckets.values() if len(b) >= 2]
    pairs = []
    while len(pairs) < budget:
        mode = rng.random()
        if mode < 0.5 and multi:
            bucket = rng.choice(multi)
            M, Mp = rng.sample(bucket, 2)
        elif mode < 0.75:
            M, Mp = rng.choice(subs), rng.choice(subs)
        else:
            M = rng.choice(subs)
            Mp = M.image(psi(random_quasiaffinity(p, rng)))
        pairs.append((M, Mp))
    return pairs
