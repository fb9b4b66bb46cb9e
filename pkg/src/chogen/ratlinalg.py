"""Exact linear algebra for small integer and rational matrices.

Certification verdicts must not depend on floating point, so the handful
of dense routines needed (leading principal minors, definiteness, a
consistent linear solve) are done with Python integers and Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _as_rows(M) -> list:
    return [list(row) for row in M]


def to_integer_matrix(M) -> list:
    """Scale a rational matrix by a positive integer to clear denominators."""
    rows = _as_rows(M)
    denom = 1
    for row in rows:
        for v in row:
            f = Fraction(v)
            denom = lcm(denom, f.denominator)
    return [[int(Fraction(v) * denom) for v in row] for row in rows]


def leading_principal_minors(M) -> list:
    """Exact leading principal minors D_1..D_k of an integer matrix.

    Computed by fraction-free Bareiss elimination; stops after the first
    zero minor (subsequent pivots would divide by it) and pads with the
    zero, which is all the definiteness tests need.
    """
    a = [[int(v) for v in row] for row in _as_rows(M)]
    size = len(a)
    minors = []
    prev = 1
    for k in range(size):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def is_positive_definite(M) -> bool:
    """Sylvester's criterion on a symmetric matrix, exact arithmetic."""
    ints = to_integer_matrix(M)
    if not ints:
        return True
    minors = leading_principal_minors(ints)
    return len(minors) == len(ints) and all(d > 0 for d in minors)


def is_positive_semidefinite(M) -> bool:
    """Exact PSD test via symmetric elimination with diagonal pivoting."""
    a = [[Fraction(v) for v in row] for row in _as_rows(M)]
    remaining = list(range(len(a)))
    while remaining:
        piv = max(remaining, key=lambda i: a[i][i])
        d = a[piv][piv]
        if d < 0:
            return False
        if d == 0:
            # all remaining diagonals are <= 0, hence 0; PSD iff the block is 0
            return all(a[i][j] == 0 for i in remaining for j in remaining)
        remaining.remove(piv)
        for i in remaining:
            if a[i][piv] == 0:
                continue
            f = a[i][piv] / d
            for j in remaining:
                a[i][j] -= f * a[piv][j]
    return True


def solve_consistent(G, B):
    """A particular exact solution Y of G Y = B, or None if inconsistent.

    G may be singular; free variables are set to zero.  Entries of the
    result are Fractions.
    """
    rows = len(G)
    if rows == 0:
        return []
    cols = len(B[0]) if B else 0
    a = [[Fraction(G[i][j]) for j in range(rows)] +
         [Fraction(B[i][c]) for c in range(cols)] for i in range(rows)]
    pivots = []
    row = 0
    for col in range(rows):
        sel = next((i for i in range(row, rows) if a[i][col] != 0), None)
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        inv = a[row][col]
        a[row] = [v / inv for v in a[row]]
        for i in range(rows):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    for i in range(row, rows):
        if any(a[i][rows + c] != 0 for c in range(cols)):
            return None
    Y = [[Fraction(0)] * cols for _ in range(rows)]
    for r, col in enumerate(pivots):
        for c in range(cols):
            Y[col][c] = a[r][rows + c]
    return Y
