"""Exact integer solutions of linear systems via column Hermite reduction."""

from __future__ import annotations

from typing import Sequence


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def column_hermite(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[tuple[int, int]]]:
    """Column-reduce ``A`` (r x n) to echelon form.

    Returns ``(H, U, pivots)`` with ``A @ U == H``, ``U`` unimodular (n x n),
    and ``pivots`` the list of ``(row, col)`` positions: column ``col`` has its
    first nonzero entry at ``row``, positive, and every later column is zero
    there and above. Columns past the last pivot are zero.
    """
    r = len(A)
    n = len(A[0]) if r else 0
    # work on columns: cols[j] is column j of A, ucols[j] column j of U
    cols = [[A[i][j] for i in range(r)] for j in range(n)]
    ucols = [[int(i == j) for i in range(n)] for j in range(n)]
    pivots = []
    p = 0
    for i in range(r):
        if p == n:
            break
        for j in range(p + 1, n):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[p][i]
            g, s, t = _xgcd(a, b)
            u, v = a // g, b // g
            # [col_p, col_j] <- [s col_p + t col_j, -v col_p + u col_j]
            for c in (cols, ucols):
                cp, cj = c[p], c[j]
                c[p] = [s * x + t * y for x, y in zip(cp, cj)]
                c[j] = [-v * x + u * y for x, y in zip(cp, cj)]
        if cols[p][i] == 0:
            continue
        if cols[p][i] < 0:
            cols[p] = [-x for x in cols[p]]
            ucols[p] = [-x for x in ucols[p]]
        d = cols[p][i]
        # reduce earlier pivot columns in this row to keep entries small
        for q in range(p):
            f = cols[q][i] // d
            if f:
                cols[q] = [x - f * y for x, y in zip(cols[q], cols[p])]
                ucols[q] = [x - f * y for x, y in zip(ucols[q], ucols[p])]
        pivots.append((i, p))
        p += 1
    H = [[cols[j][i] for j in range(n)] for i in range(r)]
    U = [[ucols[j][i] for j in range(n)] for i in range(n)]
    return H, U, pivots


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """An integer vector x with ``A x == b``, or None if there is none.

    Free directions are set to zero, so the answer is deterministic.
    """
    r = len(A)
    n = len(A[0]) if r else 0
    if r == 0:
        return [0] * n
    H, U, pivots = column_hermite(A)
    z = [0] * n
    pivot_at = dict(pivots)
    for i in range(r):
        acc = sum(H[i][q] * z[q] for q in range(n) if z[q])
        if i in pivot_at:
            p = pivot_at[i]
            quo, rem = divmod(b[i] - acc, H[i][p])
            if rem:
                return None
            z[p] = quo
        elif acc != b[i]:
            return None
    return [sum(U[k][q] * z[q] for q in range(n)) for k in range(n)]
