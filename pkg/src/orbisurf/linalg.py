"""Exact linear algebra over Z and Q on plain nested lists.

Matrices are small (rank <= 20 in every computation here), so everything is
done with Python integers and ``Fraction``; no floating point is involved in
any rank or inertia decision.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import OrbisurfError


def is_symmetric(mat) -> bool:
    n = len(mat)
    return all(len(row) == n for row in mat) and all(
        mat[i][j] == mat[j][i] for i in range(n) for j in range(i)
    )


def signature(mat) -> tuple[int, int, int]:
    """Inertia (n_plus, n_minus, n_zero) of a symmetric integer matrix.

    Fraction-free symmetric elimination: after pivoting on a nonzero diagonal
    entry p, the trailing block becomes sign(p) * (p*A_jk - A_jp*A_pk), a
    positive multiple of the Schur complement, so inertia is preserved.
    """
    if not is_symmetric(mat):
        raise OrbisurfError("divlat", "signature needs a symmetric matrix")
    a = [[int(x) for x in row] for row in mat]
    plus = minus = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if off is None:
                return plus, minus, len(mat) - plus - minus
            i, j = off
            # Congruence e_i -> e_i + e_j makes the (i, i) entry 2*a_ij.
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            plus += 1
        else:
            minus += 1
        s = 1 if p > 0 else -1
        rest = [k for k in range(n) if k != piv]
        new = [[s * (p * a[j][k] - a[j][piv] * a[piv][k]) for k in rest] for j in rest]
        g = reduce(gcd, (abs(x) for row in new for x in row), 0)
        if g > 1:
            new = [[x // g for x in row] for row in new]
        a = new
    return plus, minus, len(mat) - plus - minus


def rref(mat):
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    rows = [[Fraction(x) for x in row] for row in mat]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(mat) -> int:
    if not mat:
        return 0
    return len(rref(mat)[1])


def primitive(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fr = [Fraction(x) for x in vec]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def nullspace(mat) -> list[tuple[int, ...]]:
    """Basis of the right kernel, each vector primitive integral."""
    ncols = len(mat[0])
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(primitive(v))
    return basis


def solve(mat, rhs):
    """One rational solution x of mat @ x = rhs, or None if inconsistent."""
    n = len(mat[0]) if mat else 0
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][n]
    return x


def inverse(mat):
    n = len(mat)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise OrbisurfError("linalg", "matrix is singular")
    return [row[n:] for row in rows[:n]]


def matvec(mat, vec):
    return [sum(a * b for a, b in zip(row, vec)) for row in mat]


def bilinear(gram, u, v):
    return sum(u[i] * gram[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])
