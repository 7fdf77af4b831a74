"""Small exact linear algebra over Q, on plain lists of Fractions.

Everything here works on row-major lists of lists of ``fractions.Fraction``.
Dimensions are desk scale (tens), so no attempt is made at sparsity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = list[Fraction]
Mat = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int) -> Mat:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_from_rows(rows: Sequence[Sequence]) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Fraction, a: Mat) -> Mat:
    return [[c * x for x in row] for row in a]


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimension mismatch")
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    if a and len(a[0]) != len(v):
        raise ValueError("matrix/vector dimension mismatch")
    return [sum((c * x for c, x in zip(row, v)), ZERO) for row in a]


def commutator(a: Mat, b: Mat) -> Mat:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero_mat(a: Mat) -> bool:
    return all(x == 0 for row in a for x in row)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product, blocks ordered by the rows/cols of ``a``."""
    if not a or not b:
        return []
    n, m = len(a), len(a[0])
    p, q = len(b), len(b[0])
    out = zeros(n * p, m * q)
    for i in range(n):
        for j in range(m):
            c = a[i][j]
            if c:
                for r in range(p):
                    for s in range(q):
                        out[i * p + r][j * q + s] = c * b[r][s]
    return out


def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def nullspace(a: Mat) -> list[Vec]:
    """Basis of the right kernel of ``a``."""
    cols = len(a[0]) if a else 0
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis: list[Vec] = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve_unique(a: Mat, b: Vec) -> Vec | None:
    """Solve a x = b; return the solution if it exists and is unique, else None."""
    cols = len(a[0]) if a else 0
    aug = [row[:] + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None  # inconsistent
    if len(pivots) < cols:
        return None  # underdetermined
    x = [ZERO] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x
