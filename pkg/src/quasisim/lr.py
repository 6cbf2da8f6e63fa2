"""Littlewood-Richardson coefficients by backtracking over skew tableaux."""

from __future__ import annotations

from .canonical import Triple, admissible


def _pad(parts, n: int) -> list:
    parts = [p for p in parts if p]
    return parts + [0] * (n - len(parts))


def _partitions(total: int, max_parts: int, max_part: int | None = None):
    """Partitions of ``total`` into at most ``max_parts`` parts, as padded tuples."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield (0,) * max_parts
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def lr_coefficient(lam, mu, nu) -> int:
    """Number of LR tableaux of shape ``lam/mu`` and content ``nu``."""
    rows = max(len(lam), len(mu), len(nu))
    lam, mu, nu = _pad(lam, rows), _pad(mu, rows), _pad(nu, rows)
    if any(m > l for m, l in zip(mu, lam)):
        return 0
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    # cells in reverse reading order: rows top to bottom, each right to left
    cells = [(r, c) for r in range(rows) for c in range(lam[r] - 1, mu[r] - 1, -1)]
    filling = {}
    counts = [0] * (rows + 1)
    nvals = len([x for x in nu if x])

    def place(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        hi = nvals
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)  # rows weakly increase left to right
        hi = min(hi, r + 1)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1  # columns strictly increase
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue  # lattice word
            counts[v] += 1
            filling[(r, c)] = v
            total += place(i + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return place(0)


def two_row_triples(bound: int):
    """All ``(lam, mu, nu)`` with at most two parts, ``|lam| <= bound`` and ``|mu| + |nu| = |lam|``."""
    for size in range(bound + 1):
        for lam in _partitions(size, 2):
            for k in range(size + 1):
                for mu in _partitions(k, 2):
                    for nu in _partitions(size - k, 2):
                        yield lam, mu, nu


def two_row_unique(bound: int) -> list:
    """Two-row triples whose LR coefficient is at least 2 (none are expected)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return [(lam, mu, nu) for lam, mu, nu in two_row_triples(bound) if lr_coefficient(lam, mu, nu) >= 2]


def multiplicity_witnesses(bound: int, rows: int = 3) -> list:
    """Triples with at most ``rows`` parts, ``|lam| <= bound`` and LR coefficient >= 2."""
    out = []
    for size in range(bound + 1):
        for lam in _partitions(size, rows):
            for k in range(size + 1):
                for mu in _partitions(k, rows):
                    for nu in _partitions(size - k, rows):
                        c = lr_coefficient(lam, mu, nu)
                        if c >= 2:
                            out.append((lam, mu, nu, c))
    return out


def triple_vs_lr(t: Triple) -> bool:
    """Admissibility agrees with positivity of ``c^theta_{alpha, beta}``."""
    return admissible(t) == (lr_coefficient(t.theta, t.alpha, t.beta) >= 1)
