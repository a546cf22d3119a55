"""Tiny exact linear algebra over the rationals.

Everything here is Gaussian elimination on Fraction matrices; the
matrices involved never exceed the rank of a root datum (= 4 or so), so
no attempt at efficiency is made.
"""

from __future__ import annotations

from fractions import Fraction


def solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Return one solution x of rows @ x = rhs, or None if inconsistent.

    Free variables are set to zero.  ``rows`` is m x n, not necessarily
    square or full rank.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = a[i][n]
    return x


def solve_int(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """Like solve(), but only accepts an all-integer solution."""
    sol = solve([[Fraction(x) for x in row] for row in rows],
                [Fraction(b) for b in rhs])
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]


def invert_int_matrix(mat: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Invert an integer matrix that is invertible over the integers."""
    n = len(mat)
    cols = []
    for j in range(n):
        e = [Fraction(1 if i == j else 0) for i in range(n)]
        col = solve([[Fraction(x) for x in row] for row in mat], e)
        if col is None or any(x.denominator != 1 for x in col):
            raise ValueError("matrix is not invertible over the integers")
        cols.append([int(x) for x in col])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
