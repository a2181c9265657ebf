"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Everything here
is plain Gaussian elimination with exact pivoting; no floating point.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def _as_fraction_rows(matrix) -> Matrix:
    return [[Fraction(x) for x in row] for row in matrix]


def rref(matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _as_fraction_rows(matrix)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix) -> list[Vector]:
    """Basis of the right nullspace, one vector per free column."""
    m, pivots = rref(matrix)
    ncols = len(m[0]) if m else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs) -> Vector | None:
    """A particular solution of ``matrix @ x = rhs``, or None if inconsistent.

    When the system is underdetermined the free variables are set to zero.
    """
    m = _as_fraction_rows(matrix)
    b = [Fraction(x) for x in rhs]
    if len(m) != len(b):
        raise ValueError("matrix/rhs size mismatch")
    aug = [row + [b[i]] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    ncols = len(m[0]) if m else 0
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def row_space_basis(vectors) -> list[Vector]:
    """Canonical (RREF) basis of the span of the given vectors."""
    red, pivots = rref(vectors)
    return [red[i] for i in range(len(pivots))]


def in_span(vectors, target) -> bool:
    """Exact membership of ``target`` in the span of ``vectors``."""
    vecs = [list(v) for v in vectors]
    base = rank(vecs) if vecs else 0
    return rank(vecs + [list(target)]) == base


def same_span(vectors_a, vectors_b) -> bool:
    """Exact equality of spans."""
    a = [list(v) for v in vectors_a]
    b = [list(v) for v in vectors_b]
    ra = rank(a) if a else 0
    rb = rank(b) if b else 0
    return ra == rb == rank(a + b)


def identity_matrix(n: int) -> Matrix:
    return [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)
    ]


def mat_mul(a, b) -> Matrix:
    a = _as_fraction_rows(a)
    b = _as_fraction_rows(b)
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimension mismatch")
    ncols = len(b[0]) if b else 0
    return [
        [sum((row[t] * b[t][j] for t in range(len(b))), Fraction(0)) for j in range(ncols)]
        for row in a
    ]


def determinant(matrix) -> Fraction:
    m = _as_fraction_rows(matrix)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det
