"""Sparse matrices with arbitrary-precision integer entries."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class SparseIntMatrix:
    nrows: int
    ncols: int
    entries: Mapping  # (row, col) -> nonzero int

    def __init__(self, nrows: int, ncols: int, entries: Mapping | Iterable = ()):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean: dict[tuple[int, int], int] = {}
        for key, v in items:
            r, c = key
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry {(r, c)} outside a {nrows}x{ncols} matrix")
            if (r, c) in clean:
                raise ValueError(f"duplicate entry at {(r, c)}")
            if v:
                clean[(r, c)] = int(v)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", clean)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseIntMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "SparseIntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, rows: list[list[int]], ncols: int | None = None) -> "SparseIntMatrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> dict[int, dict[int, int]]:
        rows: dict[int, dict[int, int]] = defaultdict(dict)
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def col_dicts(self) -> dict[int, dict[int, int]]:
        cols: dict[int, dict[int, int]] = defaultdict(dict)
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()})

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        other_rows = other.row_dicts()
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (r, k), v in self.entries.items():
            for c, w in other_rows.get(k, {}).items():
                acc[(r, c)] += v * w
        return SparseIntMatrix(self.nrows, other.ncols, {key: v for key, v in acc.items() if v})

    def apply(self, vector: Mapping[int, int] | list[int]) -> dict[int, int]:
        """Matrix times a column vector given densely or as {index: value}."""
        if isinstance(vector, Mapping):
            vec = vector
        else:
            if len(vector) != self.ncols:
                raise ValueError("vector length does not match column count")
            vec = {i: v for i, v in enumerate(vector) if v}
        cols = self.col_dicts()
        out: dict[int, int] = defaultdict(int)
        for c, x in vec.items():
            for r, v in cols.get(c, {}).items():
                out[r] += v * x
        return {r: v for r, v in out.items() if v}

    def is_zero(self) -> bool:
        return not self.entries

    def hstack(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("hstack needs equal row counts")
        entries = dict(self.entries)
        entries.update({(r, c + self.ncols): v for (r, c), v in other.entries.items()})
        return SparseIntMatrix(self.nrows, self.ncols + other.ncols, entries)

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"
