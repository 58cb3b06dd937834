"""Exact rational linear algebra on small dense matrices.

Matrices are lists of rows, entries int or Fraction.  Sizes here are desk
scale (a few hundred rows at most), so plain fraction-free-ish Gaussian
elimination is plenty.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_vec(m, v):
    return [sum(r[j] * v[j] for j in range(len(v))) for r in m]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(
        len(ra) == len(rb) and all(Fraction(x) == Fraction(y) for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def rref(matrix):
    """Reduced row echelon form over the rationals.

    Returns (rows, pivot_columns); the input is not modified.
    """
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix):
    """Basis of the exact rational kernel, as lists of Fractions."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def is_multiple_of(v, w):
    """True if v lies on the rational line spanned by w (including v = 0)."""
    if all(x == 0 for x in v):
        return True
    if all(x == 0 for x in w):
        return False
    ratio = None
    for x, y in zip(v, w):
        if y == 0:
            if x != 0:
                return False
            continue
        r = Fraction(x, 1) / Fraction(y, 1)
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return ratio is not None
