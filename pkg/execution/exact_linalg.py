#!/usr/bin/env python3
"""
Exact linear algebra over the rationals
Fraction-free (Bareiss) rank and determinant, reduced row echelon forms,
kernels, and an incremental sparse echelon basis for spans and normal forms.
"""

import logging
from fractions import Fraction
from math import lcm

logger = logging.getLogger(__name__)


class SingularMatrixError(ValueError):
    """A square system had no unique solution"""


def _integer_rows(matrix):
    """Scale each row by the lcm of its denominators; returns (rows, scale product)"""
    rows = []
    scale = 1
    for row in matrix:
        denominators = [Fraction(x).denominator for x in row]
        factor = lcm(*denominators) if denominators else 1
        rows.append([int(Fraction(x) * factor) for x in row])
        scale *= factor
    return rows, scale


def bareiss_rank(matrix):
    """Rank by fraction-free elimination; pivot is the first nonzero entry in column order"""
    rows, _ = _integer_rows(matrix)
    if not rows or not rows[0]:
        return 0
    m, ncols = len(rows), len(rows[0])
    rank = 0
    previous = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        top = rows[rank]
        for r in range(rank + 1, m):
            row = rows[r]
            factor = row[col]
            for c in range(col + 1, ncols):
                row[c] = (pivot * row[c] - factor * top[c]) // previous
            row[col] = 0
        previous = pivot
        rank += 1
        if rank == m:
            break
    return rank


def bareiss_determinant(matrix):
    """Exact determinant of a square rational matrix"""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("Determinant requires a square matrix")
    if size == 0:
        return Fraction(1)
    rows, scale = _integer_rows(matrix)
    sign = 1
    previous = 1
    for k in range(size):
        pivot_row = next((r for r in range(k, size) if rows[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for r in range(k + 1, size):
            row = rows[r]
            factor = row[k]
            for c in range(k + 1, size):
                row[c] = (pivot * row[c] - factor * rows[k][c]) // previous
            row[k] = 0
        previous = pivot
    return Fraction(sign * rows[-1][-1], scale)


def rref(matrix):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)"""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(matrix, ncols=None):
    """Kernel {v : M v = 0} as a canonical (reduced row echelon) list of vectors"""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    reduced, pivots = rref(matrix) if matrix else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vector[p] = -row[free]
        basis.append(vector)
    canonical, _ = rref(basis)
    return canonical


def solve_square(matrix, rhs):
    """Unique solution x of M x = rhs"""
    size = len(matrix)
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if pivots != list(range(size)):
        raise SingularMatrixError("System has no unique solution")
    return [row[-1] for row in reduced]


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def is_zero_matrix(matrix):
    return all(x == 0 for row in matrix for x in row)


class EchelonBasis:
    """
    Incremental sparse row space over the rationals.

    Vectors are dicts column -> Fraction. Rows are kept fully reduced, so
    reduce() returns a canonical representative modulo the span.
    """

    def __init__(self, key=None):
        self._key = key
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    def reduce(self, vector):
        residual = {col: Fraction(v) for col, v in vector.items() if v}
        for pivot, row in self._rows.items():
            factor = residual.get(pivot)
            if not factor:
                continue
            for col, value in row.items():
                updated = residual.get(col, 0) - factor * value
                if updated:
                    residual[col] = updated
                else:
                    residual.pop(col, None)
        return residual

    def contains(self, vector):
        return not self.reduce(vector)

    def add(self, vector):
        """Add a vector to the span; returns True when the rank grew"""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual, key=self._key) if self._key else min(residual)
        inv = 1 / residual[pivot]
        row = {col: value * inv for col, value in residual.items()}
        for other in self._rows.values():
            factor = other.get(pivot)
            if factor:
                for col, value in row.items():
                    updated = other.get(col, 0) - factor * value
                    if updated:
                        other[col] = updated
                    else:
                        other.pop(col, None)
        self._rows[pivot] = row
        return True

    def extend(self, vectors, stop_at=None):
        """Add many vectors; stops early once the rank reaches stop_at"""
        for vector in vectors:
            if stop_at is not None and self.rank >= stop_at:
                break
            self.add(vector)
        return self.rank

    def rows(self):
        return dict(self._rows)
