"""Exact determinants over a field."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polynomial import Polynomial
from .ratfunc import RationalFunction


def det_exact(matrix: Sequence[Sequence]):
    """Determinant by Gaussian elimination with exact division.

    Entries may be ints, Fractions or RationalFunctions; Polynomial
    entries are lifted to RationalFunction first. The pivot is the first
    nonzero entry in the column. The empty matrix has determinant 1.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    rows = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        rows.append([_lift(e) for e in row])

    sign = 1
    det = None
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return _zero_like(rows[0][0])
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        det = p if det is None else det * p
        inv = 1 / p
        prow = rows[col]
        for r in range(col + 1, n):
            row = rows[r]
            if not row[col]:
                continue
            factor = row[col] * inv
            for c in range(col + 1, n):
                if prow[c]:
                    row[c] = row[c] - factor * prow[c]
    return det if sign > 0 else -det


def _lift(e):
    if isinstance(e, Polynomial):
        return RationalFunction(e, _reduced=True)
    if isinstance(e, int) and not isinstance(e, bool):
        return Fraction(e)
    return e


def _zero_like(e):
    if isinstance(e, RationalFunction):
        return RationalFunction(0)
    return Fraction(0)


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One exact solution of ``matrix @ x = rhs`` over the rationals.

    The system may be under-determined; free variables are set to 0.
    Returns None when the system is inconsistent.
    """
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != len(matrix) or len(matrix) != len(rhs):
        raise ValueError("right-hand side length does not match the matrix")
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    if any(row[-1] for row in rows[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x
