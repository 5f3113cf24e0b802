"""Exact linear algebra over Q via fraction-free (Bareiss) elimination.

Rational rows are first scaled to integer rows; all elimination happens in
Python integers and only the final back substitution produces Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Number = int | Fraction


def _to_integer_row(row: Sequence[Number]) -> list[int]:
    den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * den) for x in row]


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], int, int]:
    """In-place Bareiss elimination on the first ``ncols`` columns.

    Returns ``(rows, rank, sign)`` where ``sign`` is the parity of the row
    swaps performed.  After elimination the pivot ``rows[k][k]`` is, up to
    ``sign``, the determinant of the leading ``(k+1)``-block of the permuted
    matrix.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(min(n, ncols)):
        pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot_row is None:
            return rows, k, sign
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, len(ri)):
                # exact division is the Bareiss invariant
                ri[j] = (ri[j] * pk - rik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return rows, min(n, ncols), sign


def determinant(matrix: Sequence[Sequence[Number]]) -> Fraction:
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
        irow = _to_integer_row(row)
        den = lcm(*(Fraction(x).denominator for x in row))
        scale /= den
        rows.append(irow)
    rows, rank, sign = _bareiss(rows, n)
    if rank < n:
        return Fraction(0)
    return sign * rows[n - 1][n - 1] * scale


def leading_principal_minors(matrix: Sequence[Sequence[Number]]) -> list[Fraction]:
    """Determinants of the leading k x k blocks, for k = 1..n."""
    return [determinant([row[:k] for row in matrix[:k]]) for k in range(1, len(matrix) + 1)]


def solve(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    Raises ``ZeroDivisionError`` if the matrix is singular.
    """
    n = len(matrix)
    if len(rhs) != n:
        raise ValueError("dimension mismatch")
    if n == 0:
        return []
    rows = [_to_integer_row(list(row) + [b]) for row, b in zip(matrix, rhs)]
    rows, rank, _ = _bareiss(rows, n)
    if rank < n:
        raise ZeroDivisionError("singular matrix")
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return x
