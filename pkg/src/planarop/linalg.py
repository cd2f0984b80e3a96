"""Exact dense linear algebra over the Gaussian rationals.

Plain Gaussian elimination; pivots are chosen deterministically by the
largest exact squared modulus (ties broken by lowest row index), so repeated
runs produce identical elimination paths and identical results.
"""

from __future__ import annotations

from .errors import SingularSystemError
from .rational import GR, GaussianRational


def _pivot_row(rows, mat, j):
    best, best_mag = -1, None
    for i in rows:
        mag = mat[i][j].norm2()
        if mag and (best_mag is None or mag > best_mag):
            best, best_mag = i, mag
    return best


def solve_exact(matrix, rhs, context: str = "linear system"):
    """Solve ``matrix @ x = rhs`` exactly; raises on a singular matrix."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if len(rhs) != n:
        raise ValueError("rhs length mismatch")
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    order = list(range(n))
    for j in range(n):
        piv = _pivot_row(order[j:], a, j)
        if piv < 0:
            raise SingularSystemError(f"singular matrix in {context}")
        k = order.index(piv)
        order[j], order[k] = order[k], order[j]
        prow = a[order[j]]
        inv = GR(1) / prow[j]
        for i in order[j + 1:]:
            row = a[i]
            if row[j].is_zero():
                continue
            f = row[j] * inv
            for t in range(j, n + 1):
                row[t] = row[t] - f * prow[t]
    x = [GR(0)] * n
    for j in range(n - 1, -1, -1):
        row = a[order[j]]
        s = row[n]
        for t in range(j + 1, n):
            s = s - row[t] * x[t]
        x[j] = s / row[j]
    return x


def rank_exact(matrix) -> int:
    """Rank of a rectangular matrix of GaussianRational entries."""
    a = [list(row) for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for j in range(cols):
        piv, mag = -1, None
        for i in range(r, rows):
            m2 = a[i][j].norm2()
            if m2 and (mag is None or m2 > mag):
                piv, mag = i, m2
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = GR(1) / a[r][j]
        for i in range(r + 1, rows):
            if a[i][j].is_zero():
                continue
            f = a[i][j] * inv
            for t in range(j, cols):
                a[i][t] = a[i][t] - f * a[r][t]
        r += 1
        if r == rows:
            break
    return r


def det_exact(matrix) -> GaussianRational:
    """Determinant via exact elimination (used for minor positivity checks)."""
    a = [list(row) for row in matrix]
    n = len(a)
    det = GR(1)
    for j in range(n):
        piv, mag = -1, None
        for i in range(j, n):
            m2 = a[i][j].norm2()
            if m2 and (mag is None or m2 > mag):
                piv, mag = i, m2
        if piv < 0:
            return GR(0)
        if piv != j:
            a[j], a[piv] = a[piv], a[j]
            det = -det
        det = det * a[j][j]
        inv = GR(1) / a[j][j]
        for i in range(j + 1, n):
            if a[i][j].is_zero():
                continue
            f = a[i][j] * inv
            for t in range(j, n):
                a[i][t] = a[i][t] - f * a[j][t]
    return det
