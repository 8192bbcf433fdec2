"""k-path enumeration, magnitude boundary matrices and Asao-Izumihara complexes."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .graphs import INF, Graph
from .sparse import SparseIntMatrix

MODES = ("plain", "eulerian", "discriminant")


def path_length(g: Graph, vertices: tuple) -> float:
    D = g.distances.dist
    return sum(D[u][w] for u, w in zip(vertices, vertices[1:]))


@dataclass(frozen=True)
class GradedPath:
    vertices: tuple
    length: int

    @classmethod
    def of(cls, g: Graph, vertices: Iterable[int]) -> "GradedPath":
        vs = tuple(vertices)
        D = g.distances.dist
        for u, w in zip(vs, vs[1:]):
            if u == w:
                raise ValueError(f"consecutive repeat of vertex {u} in {vs}")
            if D[u][w] == INF:
                raise ValueError(f"vertices {u} and {w} lie in different components")
        return cls(vs, path_length(g, vs))

    @property
    def k(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_eulerian(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


@dataclass(frozen=True)
class PathBasis:
    """Ordered basis of a (k, l) chain group, optionally restricted to endpoints (a, b)."""

    k: int
    length: int
    mode: str
    endpoints: tuple | None
    paths: tuple

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.paths)

    def __getitem__(self, i):
        return self.paths[i]

    @cached_property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.paths)}

    def __contains__(self, p) -> bool:
        return p in self.index

    def dump(self) -> str:
        """One path per line: ``k l v0 v1 ... vk``."""
        return "".join(f"{self.k} {self.length} {' '.join(map(str, p))}\n" for p in self.paths)


@lru_cache(maxsize=64)
def _adjacency_by_distance(g: Graph) -> list[list[tuple[int, int]]]:
    D = g.distances.dist
    return [[(w, D[v][w]) for w in range(g.n) if w != v and D[v][w] != INF] for v in range(g.n)]


def _walk(g: Graph, start: int, k: int, ell: int, eulerian: bool, end: int | None, prune: bool):
    """Depth-first generation of k-paths of length ell from ``start``, in lexicographic order."""
    reach = _adjacency_by_distance(g)
    D = g.distances.dist
    diam = g.distances.diameter()
    out = []
    prefix = [start]
    used = {start}

    def extend(cur: int, steps: int, budget: int):
        if steps == 0:
            if budget == 0 and (end is None or cur == end):
                out.append(tuple(prefix))
            return
        for w, d in reach[cur]:
            rest = budget - d
            left = steps - 1
            if rest < 0:
                continue
            if eulerian and w in used:
                continue
            if prune:
                # every remaining step costs at least 1 and at most the diameter
                if rest < left or rest > left * diam:
                    continue
                if end is not None:
                    if left == 0 and w != end:
                        continue
                    if rest < D[w][end]:
                        continue
            prefix.append(w)
            if eulerian:
                used.add(w)
            extend(w, left, rest)
            prefix.pop()
            if eulerian:
                used.discard(w)

    extend(start, k, ell)
    return out


def enumerate_paths(g: Graph, k: int, ell: int, mode: str = "plain",
                    endpoints: tuple[int, int] | None = None, prune: bool = True) -> PathBasis:
    """All k-paths of length ``ell`` (optionally from a to b) in canonical order."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if k < 0 or ell < 0:
        raise ValueError("k and l must be non-negative")
    eulerian = mode == "eulerian"
    if endpoints is not None:
        a, b = endpoints
        starts, end = [a], b
        if eulerian and a == b and k > 0:
            # only the 0-path (a,) is Eulerian and closed
            starts = []
        if k == 0 and a != b:
            starts = []
    else:
        starts, end = range(g.n), None
    paths = []
    for s in starts:
        paths.extend(_walk(g, s, k, ell, eulerian, end, prune))
    if mode == "discriminant":
        paths = [p for p in paths if len(set(p)) < len(p)]
    return PathBasis(k, ell, mode, tuple(endpoints) if endpoints is not None else None, tuple(paths))


def paths_by_endpoints(g: Graph, k: int, ell: int, mode: str = "plain") -> dict[tuple[int, int], PathBasis]:
    """Split the (k, l) basis into its endpoint summands; empty summands are omitted."""
    full = enumerate_paths(g, k, ell, mode)
    groups: dict[tuple[int, int], list] = defaultdict(list)
    for p in full.paths:
        groups[(p[0], p[-1])].append(p)
    return {ab: PathBasis(k, ell, mode, ab, tuple(ps)) for ab, ps in sorted(groups.items())}


def boundary_matrix(g: Graph, basis_k: PathBasis, basis_km1: PathBasis) -> SparseIntMatrix:
    """Matrix of the length-preserving face map from grading k to k-1.

    Column j is the boundary of ``basis_k[j]``; in discriminant mode faces that
    are Eulerian vanish in the quotient and are dropped.
    """
    if (basis_k.length != basis_km1.length or basis_k.mode != basis_km1.mode
            or basis_k.endpoints != basis_km1.endpoints or basis_k.k != basis_km1.k + 1):
        raise ValueError("bases do not form consecutive gradings of one complex")
    D = g.distances.dist
    rows = basis_km1.index
    entries = {}
    drop_missing = basis_k.mode == "discriminant"
    for j, v in enumerate(basis_k.paths):
        for i in range(1, len(v) - 1):
            u, x, w = v[i - 1], v[i], v[i + 1]
            if u == w or D[u][w] != D[u][x] + D[x][w]:
                continue
            face = v[:i] + v[i + 1:]
            r = rows.get(face)
            if r is None:
                if drop_missing:
                    continue
                raise ValueError(f"face {face} of {v} missing from the target basis")
            key = (r, j)
            val = entries.get(key, 0) + (-1 if i % 2 else 1)
            if val:
                entries[key] = val
            else:
                del entries[key]
    return SparseIntMatrix(len(basis_km1), len(basis_k), entries)


# --- Asao-Izumihara complexes ----------------------------------------------

EMPTY = ()


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex on tagged vertices ``(x, t)``.

    Simplices are tuples of tags sorted by tag, then vertex.  The empty simplex ``()``
    may be a member; it then sits in dimension -1 of the augmented chains.
    """

    simplices: frozenset

    @classmethod
    def from_facets(cls, facets: Iterable[tuple], include_empty: bool = True) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            f = _sorted_simplex(f)
            for r in range(len(f) + 1):
                faces.update(combinations(f, r))
        if not include_empty:
            faces.discard(EMPTY)
        return cls(frozenset(faces))

    @cached_property
    def facets(self) -> tuple:
        sets = [frozenset(s) for s in self.simplices]
        return tuple(sorted((s for s, fs in zip(self.simplices, sets) if not any(fs < h for h in sets)),
                            key=lambda s: tuple(map(_tag_key, s))))

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted({v for s in self.simplices for v in s}, key=_tag_key))

    def basis(self, dim: int) -> list[tuple]:
        return sorted((s for s in self.simplices if len(s) == dim + 1), key=lambda s: tuple(map(_tag_key, s)))

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-2)

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, s) -> bool:
        return _sorted_simplex(s) in self.simplices

    def nonempty(self) -> set:
        return {s for s in self.simplices if s}

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices


def _tag_key(tag):
    x, i = tag
    return (i, x)


def _sorted_simplex(tags) -> tuple:
    return tuple(sorted(tags, key=_tag_key))


def asao_izumihara(g: Graph, a: int, b: int, ell: int, mode: str = "plain"):
    """The pair (K_l(a,b), K'_l(a,b)) or its Eulerian analogue.

    A simplex is a set of interior vertices of some a->b path of length <= l,
    each tagged by its distance along that path from a; K' keeps the
    simplices whose induced path (a, x_1, ..., x_j, b) has length <= l - 1.
    Tagging by distance rather than by index makes every simplex outside K'
    a genuine path of length l with a unique tag set, which is what the
    relative homology needs.  The empty simplex is a member whenever
    d(a, b) <= l, so relative homology in degree -1 accounts for MH_{1,l}(a, b).
    """
    if mode not in ("plain", "eulerian"):
        raise ValueError("Asao-Izumihara complexes come in plain and eulerian modes")
    if mode == "eulerian" and a == b:
        raise ValueError("the Eulerian complex needs a != b")
    eulerian = mode == "eulerian"
    D = g.distances.dist
    reach = _adjacency_by_distance(g)
    simplices: set[tuple] = set()
    interior: list[tuple[int, int]] = []

    def record():
        for r in range(len(interior) + 1):
            for sub in combinations(interior, r):
                if eulerian:
                    vs = [a] + [x for x, _ in sub] + [b]
                    if len(set(vs)) != len(vs):
                        continue
                simplices.add(sub)

    def search(cur: int, walked: int):
        if cur != b and walked + D[cur][b] <= ell:
            record()
        for w, d in reach[cur]:
            if walked + d + D[w][b] <= ell:
                interior.append((w, walked + d))
                search(w, walked + d)
                interior.pop()

    if D[a][b] != INF:
        search(a, 0)
    K = SimplicialComplex(frozenset(simplices))
    Kp = SimplicialComplex(frozenset(s for s in simplices if _induced_length(D, a, b, s) <= ell - 1))
    return K, Kp


def _induced_length(D, a, b, simplex) -> int:
    vs = [a] + [x for x, _ in simplex] + [b]
    return sum(D[u][w] for u, w in zip(vs, vs[1:]))


def simplicial_boundaries(c: SimplicialComplex, relative_to: SimplicialComplex | None = None):
    """Boundary matrices of the (relative, augmented) simplicial chain complex.

    Returns ``(bases, maps)`` where ``bases[d + 1]`` lists the simplices of
    dimension d (d >= -1) outside ``relative_to`` and ``maps[d + 1]`` is the
    boundary from dimension d to d - 1.
    """
    sub = relative_to.simplices if relative_to is not None else frozenset()
    if not sub <= c.simplices:
        raise ValueError("relative_to is not a subcomplex")
    top = c.dimension
    bases = [[s for s in c.basis(d) if s not in sub] for d in range(-1, top + 1)]
    maps = []
    for idx, basis in enumerate(bases):
        if idx == 0:
            maps.append(SparseIntMatrix(0, len(basis)))
            continue
        rows = {s: i for i, s in enumerate(bases[idx - 1])}
        entries = {}
        for j, s in enumerate(basis):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                r = rows.get(face)
                if r is not None:
                    entries[(r, j)] = -1 if i % 2 else 1
        maps.append(SparseIntMatrix(len(bases[idx - 1]), len(basis), entries))
    return bases, maps
