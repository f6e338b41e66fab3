"""Sparse matrix over Q in coordinate form."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from gclab.core.errors import GclabError


@dataclass(frozen=True, slots=True)
class SparseRationalMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise GclabError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")
            if value == 0:
                raise GclabError(f"stored zero at ({r}, {c})")

    @classmethod
    def build(
        cls, rows: int, cols: int, entries: Mapping[tuple[int, int], Fraction | int]
    ) -> SparseRationalMatrix:
        cleaned = {key: Fraction(value) for key, value in entries.items() if value != 0}
        return cls(rows=rows, cols=cols, entries=cleaned)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Fraction | int]]) -> SparseRationalMatrix:
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {
            (r, c): Fraction(value)
            for r, row in enumerate(data)
            for c, value in enumerate(row)
            if value != 0
        }
        return cls(rows=rows, cols=cols, entries=entries)

    @classmethod
    def identity(cls, size: int) -> SparseRationalMatrix:
        return cls(size, size, {(i, i): Fraction(1) for i in range(size)})

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            out[r][c] = value
        return out

    def column(self, c: int) -> dict[int, Fraction]:
        return {r: value for (r, col), value in self.entries.items() if col == c}

    def to_dense(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            dense[r][c] = value
        return dense

    def transpose(self) -> SparseRationalMatrix:
        flipped = {(c, r): value for (r, c), value in self.entries.items()}
        return SparseRationalMatrix(self.cols, self.rows, flipped)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> SparseRationalMatrix:
        """Row r moves to row_perm[r], column c to col_perm[c]."""
        moved = {(row_perm[r], col_perm[c]): value for (r, c), value in self.entries.items()}
        return SparseRationalMatrix(self.rows, self.cols, moved)

    def __matmul__(self, other: SparseRationalMatrix) -> SparseRationalMatrix:
        if self.cols != other.rows:
            raise GclabError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        right = other.row_dicts()
        product: dict[tuple[int, int], Fraction] = {}
        for (r, k), value in self.entries.items():
            for c, other_value in right[k].items():
                product[(r, c)] = product.get((r, c), Fraction(0)) + value * other_value
        return SparseRationalMatrix.build(self.rows, other.cols, product)
