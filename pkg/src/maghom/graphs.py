"""Finite simple graphs, the shortest-path metric, and the magnitude power series."""

from __future__ import annotations

import hashlib
import json
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

INF = math.inf


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on canonically indexed vertices.

    ``vertices`` holds the labels in input order; vertex ``i`` is
    ``vertices[i]``.  ``edges`` holds index pairs ``(i, j)`` with ``i < j``.
    """

    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[Sequence[int]] = ()):
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("vertex labels must be unique")
        n = len(verts)
        normalized = set()
        for e in edges:
            i, j = (int(x) for x in e)
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {e!r} has an endpoint outside 0..{n - 1}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            pair = (i, j) if i < j else (j, i)
            if pair in normalized:
                raise ValueError(f"duplicate edge {pair}")
            normalized.add(pair)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_labelled_edges(cls, vertices: Iterable[Hashable], edges: Iterable[tuple]) -> "Graph":
        verts = tuple(vertices)
        index = {v: i for i, v in enumerate(verts)}
        return cls(verts, [(index[a], index[b]) for a, b in edges])

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def index(self, label: Hashable) -> int:
        return self.vertices.index(label)

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d != INF for d in self.distances.dist[0])

    def is_tree(self) -> bool:
        return self.n > 0 and len(self.edges) == self.n - 1 and self.is_connected()

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise ValueError("graph JSON needs a 'vertices' list")
        return cls(data["vertices"], data.get("edges", []))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()

    def relabel(self, labels: Sequence[Hashable]) -> "Graph":
        return Graph(labels, self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Shortest-path distances; ``INF`` marks pairs in different components."""

    dist: tuple

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.dist[i][j]

    def __len__(self) -> int:
        return len(self.dist)

    def diameter(self) -> float:
        finite = [d for row in self.dist for d in row if d != INF]
        return max(finite, default=0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex."""
    rows = []
    for s in range(g.n):
        row = [INF] * g.n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if row[w] == INF:
                    row[w] = row[u] + 1
                    queue.append(w)
        rows.append(tuple(row))
    return DistanceMatrix(tuple(rows))


# --- generators -------------------------------------------------------------

def star(n: int) -> Graph:
    """S_n: centre 0 joined to leaves 1..n."""
    _check_order(n)
    return Graph(range(n + 1), [(0, i) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    """P_n on vertices 0..n (n edges)."""
    _check_order(n)
    return Graph(range(n + 1), [(i, i + 1) for i in range(n)])


def complete(n: int) -> Graph:
    _check_order(n)
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    _check_order(n)
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


GENERATORS = {"star": star, "path": path, "complete": complete, "cycle": cycle}


def generate(family: str, n: int) -> Graph:
    try:
        gen = GENERATORS[family]
    except KeyError:
        raise ValueError(f"unknown graph family {family!r}; expected one of {sorted(GENERATORS)}") from None
    return gen(n)


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError("graph generators need n >= 1")


# --- magnitude --------------------------------------------------------------

@dataclass(frozen=True)
class PowerSeries:
    """Truncated integer power series c_0 + c_1 q + ... + c_N q^N."""

    coefficients: tuple

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}q^{i}")
        return " + ".join(terms) or "0"


def _polymul(a: list[int], b: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(min(N - i, len(b) - 1) + 1):
                out[i + j] += x * b[j]
    return out


def _matmul(A, B, N):
    n = len(A)
    out = [[[0] * (N + 1) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            aik = A[i][k]
            if not any(aik):
                continue
            for j in range(n):
                bkj = B[k][j]
                if any(bkj):
                    prod = _polymul(aik, bkj, N)
                    cell = out[i][j]
                    for t in range(N + 1):
                        cell[t] += prod[t]
    return out


def similarity_matrix(g: Graph, trunc: int) -> list:
    """zeta_G with entries truncated to degree ``trunc``."""
    D = g.distances.dist
    Z = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            p = [0] * (trunc + 1)
            if D[i][j] <= trunc:
                p[D[i][j]] = 1
            row.append(p)
        Z.append(row)
    return Z


def mobius_matrix(g: Graph, trunc: int) -> list:
    """Inverse of zeta_G over Z[[q]]/(q^{trunc+1}) by Newton iteration.

    zeta = I + qB, so X_0 = I is correct mod q and each step
    X <- X (2I - zeta X) doubles the number of correct coefficients.
    """
    if not g.is_connected():
        raise ValueError("magnitude series needs a connected graph")
    n, N = g.n, trunc
    Z = similarity_matrix(g, N)
    ident = [[[1 if i == j and t == 0 else 0 for t in range(N + 1)] for j in range(n)] for i in range(n)]
    X = [[list(c) for c in row] for row in ident]
    precision = 1
    while precision <= N:
        ZX = _matmul(Z, X, N)
        corr = [[[2 * ident[i][j][t] - ZX[i][j][t] for t in range(N + 1)] for j in range(n)] for i in range(n)]
        X = _matmul(X, corr, N)
        precision *= 2
    return X


def _series_by_inverse(g: Graph, N: int) -> list[int]:
    X = mobius_matrix(g, N)
    total = [0] * (N + 1)
    for row in X:
        for cell in row:
            for t in range(N + 1):
                total[t] += cell[t]
    return total


def _series_by_paths(g: Graph, N: int) -> list[int]:
    # counts[v][l] = number of k-paths ending at v with length l, advanced one k at a time
    if not g.is_connected():
        raise ValueError("magnitude series needs a connected graph")
    D = g.distances.dist
    n = g.n
    total = [0] * (N + 1)
    counts = [[1] + [0] * N for _ in range(n)]
    for k in range(N + 1):
        sign = -1 if k % 2 else 1
        for v in range(n):
            for l in range(N + 1):
                total[l] += sign * counts[v][l]
        nxt = [[0] * (N + 1) for _ in range(n)]
        for u in range(n):
            cu = counts[u]
            if not any(cu):
                continue
            for w in range(n):
                d = D[u][w]
                if w == u or d > N:
                    continue
                target = nxt[w]
                for l in range(N + 1 - d):
                    if cu[l]:
                        target[l + d] += cu[l]
        counts = nxt
    return total


def magnitude_series(g: Graph, trunc: int = 8, method: str = "matrix-inverse") -> PowerSeries:
    """First ``trunc + 1`` coefficients of the magnitude of ``g``."""
    if trunc < 0:
        raise ValueError("truncation order must be non-negative")
    if method == "matrix-inverse":
        coeffs = _series_by_inverse(g, trunc)
    elif method == "path-sum":
        coeffs = _series_by_paths(g, trunc)
    else:
        raise ValueError(f"unknown method {method!r}")
    return PowerSeries(tuple(coeffs))
