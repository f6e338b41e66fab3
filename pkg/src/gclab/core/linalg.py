"""Exact rank, nullspace and linear solves over Q."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from fractions import Fraction

from gclab.models.matrix import SparseRationalMatrix


def _integer_rows(matrix: SparseRationalMatrix) -> list[tuple[int, dict[int, int]]]:
    rows: list[tuple[int, dict[int, int]]] = []
    for r, row in enumerate(matrix.row_dicts()):
        if not row:
            continue
        scale = math.lcm(*(value.denominator for value in row.values()))
        rows.append((r, {c: int(value * scale) for c, value in row.items()}))
    return rows


def rank(matrix: SparseRationalMatrix) -> int:
    """Rank by fraction-free Bareiss elimination with full pivoting.

    Row denominators are cleared first. The pivot is the smallest nonzero magnitude left,
    ties broken by (row, column). Every remaining row is updated each step, so the division
    by the previous pivot stays exact.
    """
    rows = _integer_rows(matrix)
    previous = 1
    found = 0
    while rows:
        _, pivot_slot, pivot_col = min(
            (abs(value), (row_id, slot), col)
            for slot, (row_id, row) in enumerate(rows)
            for col, value in row.items()
        )
        _, pivot_row = rows.pop(pivot_slot[1])
        pivot = pivot_row[pivot_col]
        updated: list[tuple[int, dict[int, int]]] = []
        for row_id, row in rows:
            factor = row.get(pivot_col, 0)
            merged: dict[int, int] = {}
            for col in row.keys() | pivot_row.keys():
                if col == pivot_col:
                    continue
                value = (pivot * row.get(col, 0) - factor * pivot_row.get(col, 0)) // previous
                if value:
                    merged[col] = value
            if merged:
                updated.append((row_id, merged))
        rows = updated
        previous = pivot
        found += 1
    return found


def _rref(
    rows: list[dict[int, Fraction]], cols: int
) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form over Fractions, pivoting on the first usable row."""
    work = [dict(row) for row in rows if row]
    pivots: list[int] = []
    reduced: list[dict[int, Fraction]] = []
    for col in range(cols):
        source = next((i for i, row in enumerate(work) if row.get(col)), None)
        if source is None:
            continue
        pivot_row = work.pop(source)
        inverse = 1 / pivot_row[col]
        pivot_row = {c: v * inverse for c, v in pivot_row.items()}
        for others in (work, reduced):
            for i, row in enumerate(others):
                factor = row.get(col)
                if not factor:
                    continue
                for c, v in pivot_row.items():
                    value = row.get(c, Fraction(0)) - factor * v
                    if value:
                        row[c] = value
                    else:
                        row.pop(c, None)
                others[i] = row
        work = [row for row in work if row]
        reduced.append(pivot_row)
        pivots.append(col)
    return reduced, pivots


def rref(matrix: SparseRationalMatrix) -> tuple[list[dict[int, Fraction]], list[int]]:
    return _rref(matrix.row_dicts(), matrix.cols)


def nullspace(matrix: SparseRationalMatrix) -> list[dict[int, Fraction]]:
    """Basis of the kernel, one sparse vector per free column."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis: list[dict[int, Fraction]] = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = {free: Fraction(1)}
        for row, pivot in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis.append(vector)
    return basis


def solve(
    matrix: SparseRationalMatrix, rhs: Mapping[int, Fraction] | Sequence[Fraction]
) -> list[Fraction] | None:
    """One solution of matrix @ x = rhs (free variables 0), or None when inconsistent."""
    if isinstance(rhs, Mapping):
        target = dict(rhs)
    else:
        target = {r: Fraction(v) for r, v in enumerate(rhs) if v}
    rows = matrix.row_dicts()
    for r, value in target.items():
        if value:
            rows[r][matrix.cols] = Fraction(value)
    reduced, pivots = _rref(rows, matrix.cols + 1)
    if matrix.cols in pivots:
        return None
    solution = [Fraction(0)] * matrix.cols
    for row, pivot in zip(reduced, pivots):
        solution[pivot] = row.get(matrix.cols, Fraction(0))
    return solution
