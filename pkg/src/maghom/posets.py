"""Finite posets, regular CW complexes, order complexes and the P_k^sigma family."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .graphs import Graph
from .sparse import SparseIntMatrix

HAT0, HAT1 = "hat0", "hat1"


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class Poset:
    """Poset given by its Hasse diagram.

    ``elements`` are labels, ``covers`` are index pairs ``(i, j)`` meaning
    element i is covered by element j.
    """

    elements: tuple
    covers: frozenset

    def __init__(self, elements: Iterable[Hashable], covers: Iterable[Sequence[int]] = ()):
        elems = tuple(elements)
        if len(set(elems)) != len(elems):
            raise PosetError("poset elements must be unique")
        n = len(elems)
        cov = set()
        for c in covers:
            i, j = (int(x) for x in c)
            if not (0 <= i < n and 0 <= j < n):
                raise PosetError(f"cover {c!r} refers to a missing element")
            if i == j:
                raise PosetError(f"element {elems[i]!r} cannot cover itself")
            cov.add((i, j))
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "covers", frozenset(cov))
        self._validate()

    def _validate(self) -> None:
        up = self.up
        # acyclicity: Kahn's algorithm over the cover digraph
        indeg = [0] * self.n
        for _, j in self.covers:
            indeg[j] += 1
        stack = [i for i in range(self.n) if indeg[i] == 0]
        seen = 0
        while stack:
            i = stack.pop()
            seen += 1
            for j in up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        if seen != self.n:
            raise PosetError("cover relation contains a cycle")
        above = self.strictly_above
        for i, j in self.covers:
            if any(j in above[m] for m in up[i] if m != j):
                raise PosetError(f"cover {self.elements[i]!r} < {self.elements[j]!r} is implied by transitivity")

    @classmethod
    def from_covers(cls, elements: Iterable[Hashable], covers: Iterable[tuple]) -> "Poset":
        """Build from labelled cover pairs (lower, upper)."""
        elems = tuple(elements)
        index = {e: i for i, e in enumerate(elems)}
        try:
            return cls(elems, [(index[x], index[y]) for x, y in covers])
        except KeyError as exc:
            raise PosetError(f"unknown element {exc.args[0]!r}") from None

    @classmethod
    def from_relations(cls, elements: Iterable[Hashable], relations: Iterable[tuple]) -> "Poset":
        """Build from any generating set of labelled relations x < y; covers are the transitive reduction."""
        elems = tuple(elements)
        index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        less = [[False] * n for _ in range(n)]
        for x, y in relations:
            if x not in index or y not in index:
                raise PosetError(f"relation {(x, y)!r} mentions an unknown element")
            less[index[x]][index[y]] = True
        for m in range(n):
            row_m = less[m]
            for i in range(n):
                if less[i][m]:
                    row_i = less[i]
                    for j in range(n):
                        if row_m[j]:
                            row_i[j] = True
        if any(less[i][i] for i in range(n)):
            raise PosetError("relations contain a cycle")
        covers = [(i, j) for i in range(n) for j in range(n)
                  if less[i][j] and not any(less[i][m] and less[m][j] for m in range(n))]
        return cls(elems, covers)

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, label: Hashable) -> int:
        return self.elements.index(label)

    @cached_property
    def up(self) -> tuple:
        out: list[list[int]] = [[] for _ in self.elements]
        for i, j in self.covers:
            out[i].append(j)
        return tuple(tuple(sorted(u)) for u in out)

    @cached_property
    def down(self) -> tuple:
        out: list[list[int]] = [[] for _ in self.elements]
        for i, j in self.covers:
            out[j].append(i)
        return tuple(tuple(sorted(d)) for d in out)

    @cached_property
    def strictly_above(self) -> tuple:
        memo: dict[int, frozenset] = {}

        def above(i):
            if i not in memo:
                acc = set()
                for j in self.up[i]:
                    acc.add(j)
                    acc |= above(j)
                memo[i] = frozenset(acc)
            return memo[i]

        for i in self._topological_order()[::-1]:
            above(i)
        return tuple(memo[i] for i in range(self.n))

    def _topological_order(self) -> list[int]:
        indeg = [len(d) for d in self.down]
        order = []
        stack = [i for i in range(self.n) if indeg[i] == 0]
        while stack:
            i = stack.pop()
            order.append(i)
            for j in self.up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        return order

    def less(self, i: int, j: int) -> bool:
        return j in self.strictly_above[i]

    def minimal(self) -> list[int]:
        return [i for i in range(self.n) if not self.down[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(self.n) if not self.up[i]]

    def label_covers(self) -> list[tuple]:
        return sorted((self.elements[i], self.elements[j]) for i, j in self.covers)

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in sorted(self.covers)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Poset":
        if not isinstance(data, dict) or "elements" not in data:
            raise PosetError("poset JSON needs an 'elements' list")
        return cls(data["elements"], data.get("covers", []))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={len(self.covers)})"


def adjoin_bounds(p: Poset, bottom: Hashable = HAT0, top: Hashable = HAT1) -> Poset:
    """P-hat: a new least element first and a new greatest element last."""
    if bottom in p.elements or top in p.elements or bottom == top:
        raise PosetError("labels for the adjoined bounds must be fresh and distinct")
    n = p.n
    covers = [(i + 1, j + 1) for i, j in p.covers]
    covers += [(0, i + 1) for i in p.minimal()]
    covers += [(i + 1, n + 1) for i in p.maximal()]
    if n == 0:
        covers.append((0, 1))
    return Poset((bottom,) + p.elements + (top,), covers)


@dataclass(frozen=True)
class NotRanked:
    """Two maximal chains of different lengths."""

    shorter: tuple
    longer: tuple

    def __bool__(self) -> bool:
        return False


def rank_of(p: Poset) -> int | NotRanked:
    """Common length of all maximal chains, -1 for the empty poset."""
    if p.n == 0:
        return -1
    order = p._topological_order()
    shortest: dict[int, tuple] = {}
    longest: dict[int, tuple] = {}
    for i in order:
        if not p.down[i]:
            shortest[i] = longest[i] = (i,)
            continue
        shortest[i] = min((shortest[j] + (i,) for j in p.down[i]), key=len)
        longest[i] = max((longest[j] + (i,) for j in p.down[i]), key=len)
    tops = p.maximal()
    lo = min((shortest[t] for t in tops), key=len)
    hi = max((longest[t] for t in tops), key=len)
    if len(lo) != len(hi):
        return NotRanked(tuple(p.elements[i] for i in lo), tuple(p.elements[i] for i in hi))
    return len(hi) - 1


def hasse_graph(p: Poset) -> Graph:
    return Graph(p.elements, p.covers)


# --- regular CW complexes ----------------------------------------------------

@dataclass(frozen=True)
class RegularCW:
    """Cells with dimensions and closures (the cells strictly inside each closure)."""

    dims: Mapping
    closure: Mapping

    def __init__(self, cells: Iterable[tuple], closure: Mapping):
        dims: dict = {}
        for cid, d in cells:
            if cid in dims:
                raise PosetError(f"duplicate cell id {cid!r}")
            if int(d) < 0:
                raise PosetError(f"cell {cid!r} has negative dimension")
            dims[cid] = int(d)
        clo = {c: frozenset(closure.get(c, ())) for c in dims}
        for c, faces in clo.items():
            for f in faces:
                if f not in dims:
                    raise PosetError(f"closure of {c!r} mentions unknown cell {f!r}")
                if dims[f] >= dims[c]:
                    raise PosetError(f"closure of {c!r} contains {f!r} of dimension {dims[f]} >= {dims[c]}")
                if not clo[f] <= faces:
                    raise PosetError(f"closure of {c!r} is not downward closed at {f!r}")
            if dims[c] == 0 and faces:
                raise PosetError(f"0-cell {c!r} has a nonempty boundary")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "closure", clo)

    @classmethod
    def from_faces(cls, faces: Mapping) -> "RegularCW":
        """Build from the codimension-one faces of each cell; dimensions and closures are derived."""
        cells = set(faces) | {f for fs in faces.values() for f in fs}
        dims: dict = {}
        closure: dict = {}

        def visit(c, trail=()):
            if c in dims:
                return
            if c in trail:
                raise PosetError(f"face relation cycles through {c!r}")
            below = faces.get(c, ())
            for f in below:
                visit(f, trail + (c,))
            dims[c] = 1 + max((dims[f] for f in below), default=-1)
            closure[c] = set(below).union(*(closure[f] for f in below)) if below else set()

        for c in sorted(cells, key=str):
            visit(c)
        return cls([(c, dims[c]) for c in sorted(cells, key=lambda c: (dims[c], str(c)))], closure)

    @property
    def cells(self) -> list[tuple]:
        return list(self.dims.items())

    def count_by_dimension(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.dims.values():
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d for d in self.dims.values())

    def to_dict(self) -> dict:
        return {"cells": [{"id": c, "dim": d, "closure": sorted(self.closure[c], key=str)} for c, d in self.dims.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "RegularCW":
        try:
            cells = data["cells"]
            return cls([(c["id"], c["dim"]) for c in cells], {c["id"]: c.get("closure", []) for c in cells})
        except (KeyError, TypeError) as exc:
            raise PosetError(f"malformed CW JSON: {exc}") from None


def face_poset(k: RegularCW) -> Poset:
    cells = list(k.dims)
    return Poset.from_relations(cells, [(f, c) for c in cells for f in k.closure[c]])


# --- order complexes -----------------------------------------------------------

@dataclass(frozen=True)
class OrderComplex:
    """Chains a_0 < ... < a_n of a poset, by dimension, with simplicial boundaries.

    ``boundaries[n]`` maps C_n to C_{n-1}; ``boundaries[0]`` is the zero map to
    the zero group.
    """

    poset: Poset
    bases: tuple
    boundaries: tuple

    @cached_property
    def index(self) -> tuple:
        return tuple({c: i for i, c in enumerate(b)} for b in self.bases)

    @property
    def dimension(self) -> int:
        return len(self.bases) - 1

    def boundary_into(self, n: int) -> SparseIntMatrix:
        """The map C_{n+1} -> C_n (zero beyond the top dimension)."""
        if n + 1 < len(self.boundaries):
            return self.boundaries[n + 1]
        rows = len(self.bases[n]) if 0 <= n < len(self.bases) else 0
        return SparseIntMatrix(rows, 0)

    def homology(self, n: int):
        from .homology import HomologyGroup, homology
        if n < 0 or n >= len(self.bases):
            return HomologyGroup()
        return homology(self.boundaries[n], self.boundary_into(n))

    def labelled(self, n: int) -> list[tuple]:
        return [tuple(self.poset.elements[i] for i in c) for c in self.bases[n]]


def order_complex(p: Poset) -> OrderComplex:
    above = p.strictly_above
    chains: list[list[tuple]] = []
    level = sorted((i,) for i in range(p.n))
    while level:
        chains.append(level)
        level = sorted(c + (j,) for c in level for j in above[c[-1]])
    index = [{c: i for i, c in enumerate(b)} for b in chains]
    maps = [SparseIntMatrix(0, len(chains[0]) if chains else 0)]
    for dim in range(1, len(chains)):
        rows = index[dim - 1]
        entries = {}
        for j, c in enumerate(chains[dim]):
            for i in range(len(c)):
                entries[(rows[c[:i] + c[i + 1:]], j)] = -1 if i % 2 else 1
        maps.append(SparseIntMatrix(len(chains[dim - 1]), len(chains[dim]), entries))
    return OrderComplex(p, tuple(tuple(b) for b in chains), tuple(maps))


@dataclass(frozen=True)
class IntChain:
    """Finitely supported integer combination of n-chains, keyed by labelled tuples."""

    grading: int
    coeffs: Mapping

    def __init__(self, grading: int, coeffs: Mapping | Iterable = ()):
        acc: dict = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for c, v in items:
            c = tuple(c)
            if len(c) != grading + 1:
                raise ValueError(f"{c!r} is not a {grading}-chain")
            acc[c] = acc.get(c, 0) + int(v)
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "coeffs", {c: v for c, v in acc.items() if v})

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "IntChain") -> "IntChain":
        if other.grading != self.grading:
            raise ValueError("cannot add chains of different gradings")
        return IntChain(self.grading, list(self.coeffs.items()) + list(other.coeffs.items()))

    def __rmul__(self, m: int) -> "IntChain":
        return IntChain(self.grading, {c: m * v for c, v in self.coeffs.items()})

    def __neg__(self) -> "IntChain":
        return (-1) * self

    def __eq__(self, other) -> bool:
        return isinstance(other, IntChain) and self.grading == other.grading and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.grading, frozenset(self.coeffs.items())))

    def boundary(self) -> "IntChain":
        """Alternating-face boundary; the zero chain in grading -1 for 0-chains."""
        out: list = []
        for c, v in self.coeffs.items():
            for i in range(len(c)):
                out.append((c[:i] + c[i + 1:], -v if i % 2 else v))
        return IntChain(self.grading - 1, out) if self.grading > 0 else IntChain(-1)

    def to_vector(self, oc: OrderComplex) -> dict[int, int]:
        """Coordinates in the order complex basis; fails on chains that are not strictly increasing."""
        lookup = {lab: i for i, lab in enumerate(oc.labelled(self.grading))}
        try:
            return {lookup[c]: v for c, v in self.coeffs.items()}
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]!r} is not a chain of the poset") from None


# --- the P_k^sigma family --------------------------------------------------------

def cycle_to_oneline(cycles: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    """Cycle notation on [n] to one-line notation, e.g. ((1, 2, 3),) -> (2, 3, 1)."""
    image = list(range(1, n + 1))
    for cyc in cycles:
        for x, y in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            if not 1 <= x <= n:
                raise ValueError(f"{x} is outside [1, {n}]")
            image[x - 1] = y
    if sorted(image) != list(range(1, n + 1)):
        raise ValueError("cycles do not define a permutation")
    return tuple(image)


def round_robin_blocks(k: int) -> list[list[tuple[int, int]]]:
    """Circle-method 1-factorization of K_k: vertex k fixed, the rest rotating."""
    if k < 2 or k % 2:
        raise ValueError("a 1-factorization needs an even number of vertices")
    m = k - 1
    blocks = []
    for r in range(m):
        block = [tuple(sorted((r + 1, k)))]
        for i in range(1, k // 2):
            x, y = (r + i) % m + 1, (r - i) % m + 1
            block.append(tuple(sorted((x, y))))
        blocks.append(sorted(block))
    return blocks


def _check_pk_inputs(k: int, sigma: Sequence[int], blocks) -> tuple[tuple, list[list[tuple]]]:
    if k <= 2 or k % 2:
        raise PosetError(f"k must be an even integer greater than 2, got {k}")
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, k)):
        raise PosetError(f"sigma must be a permutation of 1..{k - 1} in one-line notation")
    fixed = [m for m in range(1, k) if sigma[m - 1] == m]
    if fixed:
        raise PosetError(f"sigma is not a derangement: fixes {fixed}")
    if blocks is None:
        blocks = round_robin_blocks(k)
    blocks = [[tuple(sorted(int(x) for x in pair)) for pair in b] for b in blocks]
    if len(blocks) != k - 1:
        raise PosetError(f"expected {k - 1} blocks, got {len(blocks)}")
    for m, b in enumerate(blocks, 1):
        covered = sorted(x for pair in b for x in pair)
        if covered != list(range(1, k + 1)) or any(len(pair) != 2 for pair in b):
            raise PosetError(f"block {m} is not a perfect matching of 1..{k}")
    pairs = [pair for b in blocks for pair in b]
    if len(set(pairs)) != len(pairs):
        raise PosetError("blocks overlap, so they do not partition the pairs")
    return sigma, blocks


def _a(i):
    return f"a{i}"


def _b(pair):
    return f"b{pair[0]}_{pair[1]}"


def _c(m):
    return f"c{m}"


def build_pk_sigma(k: int, sigma: Sequence[int], blocks=None) -> Poset:
    """The rank-2 poset on a_i, b_{i,j}, c_m; ``sigma`` is one-line notation on 1..k-1."""
    sigma, blocks = _check_pk_inputs(k, sigma, blocks)
    elems = [_a(i) for i in range(1, k + 1)]
    elems += [_b(p) for p in combinations(range(1, k + 1), 2)]
    elems += [_c(m) for m in range(1, k)]
    covers = []
    for p in combinations(range(1, k + 1), 2):
        covers += [(_a(p[0]), _b(p)), (_a(p[1]), _b(p))]
    for m in range(1, k):
        for p in blocks[m - 1] + blocks[sigma[m - 1] - 1]:
            covers.append((_b(p), _c(m)))
    return Poset.from_covers(elems, covers)


def alpha_gamma_chains(k: int, sigma: Sequence[int], blocks=None) -> tuple[IntChain, IntChain]:
    """The 1-chain alpha and the 2-chain gamma with boundary(gamma) = 2 alpha."""
    sigma, blocks = _check_pk_inputs(k, sigma, blocks)
    alpha: list = []
    gamma: list = []
    for m in range(1, k):
        for p in blocks[m - 1] + blocks[sigma[m - 1] - 1]:
            alpha.append(((_b(p), _c(m)), 1))
            for i in p:
                gamma.append(((_a(i), _b(p), _c(m)), 1))
        for i in range(1, k + 1):
            alpha.append(((_a(i), _c(m)), -1))
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i != j:
                alpha.append(((_a(i), _b(tuple(sorted((i, j))))), 1))
    return IntChain(1, alpha), IntChain(2, gamma)
