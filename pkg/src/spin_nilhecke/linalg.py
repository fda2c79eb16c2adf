"""Exact linear algebra over the rationals on small dense and sparse systems."""

from __future__ import annotations

from collections.abc import Hashable, Mapping, Sequence
from fractions import Fraction


def _to_rows(matrix) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in matrix]


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column list."""
    rows = _to_rows(matrix)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``; `ncols` is needed when M has no rows."""
    if not matrix:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    rows, pivots = rref(matrix)
    n = len(matrix[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(matrix, rhs) -> list[Fraction] | None:
    """One solution of ``M v = rhs`` (free variables zero) or None."""
    if not matrix:
        return None
    n = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    v = [Fraction(0)] * n
    for row, pc in zip(rows, pivots):
        v[pc] = row[n]
    return v


def determinant(matrix) -> Fraction:
    rows = _to_rows(matrix)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        pv = rows[c][c]
        det *= pv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


class SparseEchelon:
    """
    Incremental echelon basis for sparse vectors (dicts keyed by sortable
    labels); the pivot of a vector is its smallest key.
    """

    def __init__(self):
        self._rows: dict[Hashable, dict] = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, vector: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in vector.items() if c != 0}
        while v:
            p = min(v)
            row = self._rows.get(p)
            if row is None:
                return v
            f = v[p]
            for k, c in row.items():
                nv = v.get(k, 0) - f * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vector: Mapping) -> bool:
        """Insert `vector`; returns False when it is already in the span."""
        v = self.reduce(vector)
        if not v:
            return False
        p = min(v)
        pv = v[p]
        self._rows[p] = {k: c / pv for k, c in v.items()}
        return True


def column_matrix(columns: Sequence[Mapping], keys: Sequence | None = None) -> tuple[list[list], list]:
    """Dense matrix whose columns are the given sparse vectors."""
    if keys is None:
        keys = sorted({k for col in columns for k in col})
    index = {k: i for i, k in enumerate(keys)}
    mat = [[0] * len(columns) for _ in keys]
    for j, col in enumerate(columns):
        for k, c in col.items():
            mat[index[k]][j] = c
    return mat, list(keys)
