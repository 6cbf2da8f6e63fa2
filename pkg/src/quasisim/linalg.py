"""Exact dense linear algebra over Q and Q(i).

Matrices are lists of rows; vectors are tuples. Entries are ``Fraction`` or
:class:`~quasisim.scalars.GaussianRational`, never floats.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import conj

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int) -> list:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> list:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def shape(a) -> tuple:
    return (len(a), len(a[0]) if a else 0)


def transpose(a, cols: int | None = None) -> list:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def conj_transpose(a, cols: int | None = None) -> list:
    return [[conj(x) for x in row] for row in transpose(a, cols)]


def matmul(a, b, inner: int | None = None) -> list:
    """``a @ b``. ``inner`` is only needed when ``a`` has no rows and ``b`` no columns."""
    if not a:
        return []
    bt = transpose(b)
    if not bt:
        return [[] for _ in a]
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), ZERO) for col in bt])
    return out


def matvec(a, v) -> tuple:
    out = []
    for row in a:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(s)
    return tuple(out)


def matpow(a, k: int) -> list:
    n = len(a)
    result = identity(n)
    for _ in range(k):
        result = matmul(result, a)
    return result


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(nonzero_rows, pivot_columns)``; each returned row has a 1 at
    its pivot and zeros in every other pivot column.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = ONE / m[r][c]
        if inv != 1:
            m[r] = [x * inv for x in m[r]]
        prow = m[r]
        nz = [(k, x) for k, x in enumerate(prow) if x and k > c]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    row[c] = ZERO
                    for k, x in nz:
                        row[k] = row[k] - f * x
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a, ncols: int) -> list:
    """Basis of ``{x : a x = 0}`` as tuples, one per free column."""
    reduced, pivots = rref(a, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in zip(reduced, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


def solve(a, b):
    """Unique solution of the square nonsingular system ``a x = b`` (``b`` a vector)."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug, n + 1)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return tuple(row[n] for row in reduced)


def inverse(a) -> list:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    reduced, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [list(row[n:]) for row in reduced]


def columns(vectors, nrows: int) -> list:
    """Matrix whose columns are ``vectors``."""
    if not vectors:
        return [[] for _ in range(nrows)]
    return [list(r) for r in zip(*vectors)]


def dot(x, y):
    """Hermitian inner product ``sum x_k conj(y_k)``."""
    s = ZERO
    for a, b in zip(x, y):
        if a and b:
            s += a * conj(b)
    return s
