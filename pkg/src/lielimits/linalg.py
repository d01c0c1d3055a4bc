"""Exact rational linear algebra on small dense matrices.

Matrices are lists of lists of Fraction; all routines are pure and return
fresh objects.  Everything here is elimination-based and exact, no pivot
tolerance games.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def frac_matrix(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((aij * vj for aij, vj in zip(row, v)), Fraction(0)) for row in a]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form.  Returns (rref matrix, pivot column list).

    Zero rows are kept at the bottom so the caller can slice them off.
    """
    m = [row[:] for row in m]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def row_space_basis(m: Matrix) -> Matrix:
    """Canonical (RREF) basis of the row space; empty list for the zero space."""
    red, pivots = rref(m)
    return [red[i] for i in range(len(pivots))]


def invert(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + ident_row for row, ident_row in zip(frac_matrix(m), identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def nullspace_basis(m: Matrix, cols: int) -> Matrix:
    """Basis of {x : m @ x = 0} inside Q^cols (m given as rows of functionals)."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def in_row_space(v: Vector, basis_rref: Matrix) -> bool:
    """Membership test against an RREF basis."""
    v = [Fraction(x) for x in v]
    for row in basis_rref:
        pc = next(i for i, x in enumerate(row) if x != 0)
        if v[pc] != 0:
            f = v[pc]
            v = [a - f * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)
