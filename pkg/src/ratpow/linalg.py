"""Exact linear algebra over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.

    All intermediate entries stay integral: each step divides exactly by the
    previous pivot.
    """
    A = [list(map(int, row)) for row in matrix]
    if not A or not A[0]:
        return 0
    rows, cols = len(A), len(A[0])
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, rows):
            f = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c + 1, cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def solve_square(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Solve ``A x = b`` exactly; ``None`` if ``A`` is singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        row_c = [x / p for x in M[c]]
        M[c] = row_c
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], row_c)]
    return [M[i][n] for i in range(n)]
