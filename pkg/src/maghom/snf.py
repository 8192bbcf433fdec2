"""Smith normal form over the integers.

Two routes are provided.  The default works directly on the sparse
representation: unit pivots are eliminated first in Markowitz order (the
boundary matrices here are overwhelmingly +-1), then whatever is left is
diagonalised by Euclidean row/column reduction and the diagonal is put into
divisibility order.  With ``transforms=True`` a dense algorithm also returns
unimodular U, V with U @ M @ V = diag(d_1, ..., d_r, 0, ...).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .sparse import SparseIntMatrix


@dataclass(frozen=True)
class SNFResult:
    shape: tuple
    factors: tuple  # nonzero invariant factors, ascending, each dividing the next
    U: SparseIntMatrix | None = None
    V: SparseIntMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def diagonal(self) -> tuple:
        return self.factors + (0,) * (min(self.shape) - len(self.factors))

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.factors if d > 1)


def smith_normal_form(m: SparseIntMatrix, transforms: bool = False) -> SNFResult:
    if transforms:
        U, D, V = _dense_snf(m.to_dense(), m.nrows, m.ncols)
        factors = []
        for i in range(min(m.nrows, m.ncols)):
            if D[i][i]:
                factors.append(D[i][i])
        return SNFResult(m.shape, tuple(factors), SparseIntMatrix.from_dense(U, m.nrows),
                         SparseIntMatrix.from_dense(V, m.ncols))
    return SNFResult(m.shape, tuple(_sparse_invariants(m)))


def rank(m: SparseIntMatrix) -> int:
    return smith_normal_form(m).rank


def normalize_diagonal(values) -> list[int]:
    """Invariant factors of a diagonal matrix with the given nonzero entries."""
    ones = 0
    rest = []
    for v in values:
        v = abs(v)
        if v == 1:
            ones += 1
        elif v:
            rest.append(v)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    # gcd steps can produce new 1s at the front
    return [1] * ones + sorted(rest)


class _Eliminator:
    """Row-dict/column-set view of a matrix that is consumed as pivots are found."""

    def __init__(self, m: SparseIntMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for (r, c), v in m.entries.items():
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, set()).add(r)
        self.diagonal: list[int] = []

    def add_row_multiple(self, target: int, source: int, factor: int) -> None:
        """row[target] -= factor * row[source]"""
        trow = self.rows[target]
        for c, v in self.rows[source].items():
            nv = trow.get(c, 0) - factor * v
            if nv:
                if c not in trow:
                    self.cols[c].add(target)
                trow[c] = nv
            elif c in trow:
                del trow[c]
                self.cols[c].discard(target)
        if not trow:
            del self.rows[target]

    def remove_pivot(self, r: int, c: int) -> None:
        # callers guarantee column c holds only row r
        self.diagonal.append(abs(self.rows[r][c]))
        for c2 in self.rows.pop(r):
            s = self.cols[c2]
            s.discard(r)
            if not s:
                del self.cols[c2]

    def unit_phase(self) -> None:
        heap = [(len(rs), c) for c, rs in self.cols.items()]
        heapq.heapify(heap)
        while heap:
            size, c = heapq.heappop(heap)
            rs = self.cols.get(c)
            if not rs:
                continue
            if len(rs) != size:
                heapq.heappush(heap, (len(rs), c))
                continue
            best = None
            for r in rs:
                v = self.rows[r][c]
                if v == 1 or v == -1:
                    cost = len(self.rows[r])
                    if best is None or cost < best[0]:
                        best = (cost, r)
            if best is None:
                continue
            r = best[1]
            p = self.rows[r][c]
            touched = set()
            for r2 in list(self.cols[c]):
                if r2 != r:
                    self.add_row_multiple(r2, r, self.rows[r2][c] * p)
            touched.update(self.rows[r].keys())
            self.remove_pivot(r, c)
            for c2 in touched:
                if c2 in self.cols:
                    heapq.heappush(heap, (len(self.cols[c2]), c2))

    def _min_entry(self):
        best = None
        for r, row in self.rows.items():
            for c, v in row.items():
                a = abs(v)
                if best is None or a < best[0] or (a == best[0] and len(row) * len(self.cols[c]) < best[3]):
                    best = (a, r, c, len(row) * len(self.cols[c]))
                    if a == 1 and best[3] == 1:
                        return best
        return best

    def general_phase(self) -> None:
        while self.rows:
            _, r, c, _ = self._min_entry()
            while True:
                p = self.rows[r][c]
                # clear the pivot column with row operations
                moved = None
                for r2 in list(self.cols[c]):
                    if r2 == r:
                        continue
                    q = self.rows[r2][c] // p
                    self.add_row_multiple(r2, r, q)
                    rem = self.rows.get(r2, {}).get(c)
                    if rem and (moved is None or abs(rem) < abs(self.rows[moved[0]][moved[1]])):
                        moved = (r2, c)
                if moved is None:
                    # clear the pivot row with column operations; the column is now just the pivot
                    row = self.rows[r]
                    for c2 in list(row):
                        if c2 == c:
                            continue
                        q = row[c2] // p
                        nv = row[c2] - q * p
                        if nv:
                            row[c2] = nv
                            if moved is None or abs(nv) < abs(row[moved[1]]):
                                moved = (r, c2)
                        else:
                            del row[c2]
                            self.cols[c2].discard(r)
                            if not self.cols[c2]:
                                del self.cols[c2]
                if moved is None:
                    self.remove_pivot(r, c)
                    break
                r, c = moved


def _sparse_invariants(m: SparseIntMatrix) -> list[int]:
    if not m.entries:
        return []
    elim = _Eliminator(m)
    elim.unit_phase()
    elim.general_phase()
    return normalize_diagonal(elim.diagonal)


def _dense_snf(A: list[list[int]], m: int, n: int):
    A = [list(row) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(target, source, f):
        # row_target += f * row_source
        A[target] = [x + f * y for x, y in zip(A[target], A[source])]
        U[target] = [x + f * y for x, y in zip(U[target], U[source])]

    def add_col(target, source, f):
        for row in A:
            row[target] += f * row[source]
        for row in V:
            row[target] += f * row[source]

    for t in range(min(m, n)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V
