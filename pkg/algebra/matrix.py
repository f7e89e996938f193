"""
Exact linear algebra over the coefficient rings.

Matrices are lists of rows. Elimination is fraction-free (Bareiss) wherever
the ring only offers exact division; pivots are the first nonzero entry in
column order so results are reproducible.
"""

from __future__ import annotations

import logging
from typing import Any, Optional, Sequence

logger = logging.getLogger(__name__)


def _copy(rows: Sequence[Sequence[Any]]) -> list[list[Any]]:
    return [list(row) for row in rows]


def bareiss_determinant(rows: Sequence[Sequence[Any]], ring: Any) -> Any:
    """Determinant of a square matrix using only exact division in ring."""
    m = _copy(rows)
    n = len(m)
    if n == 0:
        return ring.one
    if any(len(row) != n for row in m):
        raise ValueError("Determinant needs a square matrix")

    sign = 1
    previous = ring.one
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not ring.is_zero(m[r][k])), None)
        if pivot_row is None:
            return ring.zero
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = ring.exquo(pivot * m[i][j] - m[i][k] * m[k][j], previous)
            m[i][k] = ring.zero
        previous = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def echelon_form(rows: Sequence[Sequence[Any]], ring: Any) -> tuple[list[list[Any]], list[int]]:
    """Fraction-free row echelon form and its pivot columns."""
    m = _copy(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    previous = ring.one
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if not ring.is_zero(m[i][c])), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        for i in range(r + 1, n_rows):
            factor = m[i][c]
            for j in range(c, n_cols):
                m[i][j] = ring.exquo(pivot * m[i][j] - factor * m[r][j], previous)
        previous = pivot
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[Any]], ring: Any) -> int:
    return len(echelon_form(rows, ring)[1])


def rref(rows: Sequence[Sequence[Any]], field: Any) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form over a field."""
    m = _copy(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if not field.is_zero(m[i][c])), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = field.inverse(m[r][c])
        m[r] = [entry * inv for entry in m[r]]
        for i in range(n_rows):
            if i != r and not field.is_zero(m[i][c]):
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(rows: Sequence[Sequence[Any]], field: Any, n_cols: Optional[int] = None) -> list[list[Any]]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        if n_cols is None:
            raise ValueError("n_cols is required for an empty matrix")
        return [[field.one if i == j else field.zero for i in range(n_cols)] for j in range(n_cols)]
    n_cols = len(rows[0])
    reduced, pivots = rref(rows, field)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [field.zero] * n_cols
        vector[f] = field.one
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row_index][f]
        basis.append(vector)
    return basis


def solve(rows: Sequence[Sequence[Any]], rhs: Sequence[Any], field: Any) -> Optional[list[Any]]:
    """One solution of rows * x = rhs, or None when the system is inconsistent."""
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    n_cols = len(rows[0])
    reduced, pivots = rref(augmented, field)
    if n_cols in pivots:
        return None
    solution = [field.zero] * n_cols
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = reduced[row_index][n_cols]
    return solution


def mat_vec(rows: Sequence[Sequence[Any]], vector: Sequence[Any], ring: Any) -> list[Any]:
    out = []
    for row in rows:
        acc = ring.zero
        for a, b in zip(row, vector):
            if not ring.is_zero(a) and not ring.is_zero(b):
                acc = acc + a * b
        out.append(acc)
    return out


def signed_minor_kernel(rows: Sequence[Sequence[Any]], ring: Any) -> list[Any]:
    """v_j = (-1)^j det(M without column j) for an n x (n+1) matrix M."""
    n = len(rows)
    if any(len(row) != n + 1 for row in rows):
        raise ValueError(f"Signed minors need an n x (n+1) matrix, got {n} rows")
    vector = []
    for j in range(n + 1):
        minor = [row[:j] + row[j + 1:] for row in (list(r) for r in rows)]
        det = bareiss_determinant(minor, ring)
        vector.append(det if j % 2 == 0 else -det)
    logger.debug(f"Signed minors computed for a {n}x{n + 1} system")
    return vector


def map_matrix(rows: Sequence[Sequence[Any]], hom: Any) -> list[list[Any]]:
    return [[hom(entry) for entry in row] for row in rows]
