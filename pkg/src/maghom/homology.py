"""Integer homology of the magnitude chain complexes and their relatives."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Mapping

from .chains import PathBasis, boundary_matrix, enumerate_paths, paths_by_endpoints
from .graphs import Graph, magnitude_series
from .snf import normalize_diagonal, smith_normal_form
from .sparse import SparseIntMatrix

KINDS = {"MH": "plain", "EMH": "eulerian", "DMH": "discriminant"}


class MalformedComplex(ValueError):
    """Raised when consecutive boundary maps do not compose to zero."""


@dataclass(frozen=True)
class HomologyGroup:
    """Z^free_rank plus Z/d for each invariant factor d in ``torsion``."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        tors = tuple(sorted(int(d) for d in self.torsion))
        if any(d <= 1 for d in tors):
            raise ValueError("torsion factors must exceed 1")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise ValueError(f"torsion factors {tors} do not form a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def __add__(self, other: "HomologyGroup") -> "HomologyGroup":
        # direct sum: re-derive invariant factors from the combined elementary pieces
        return HomologyGroup(self.free_rank + other.free_rank,
                             tuple(d for d in normalize_diagonal(self.torsion + other.torsion) if d > 1))

    def contains_cyclic(self, order: int) -> bool:
        """True if Z/order embeds in the torsion part."""
        return any(d % order == 0 for d in self.torsion)

    def to_dict(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def direct_sum(groups: Iterable[HomologyGroup]) -> HomologyGroup:
    free = 0
    tors: list[int] = []
    for h in groups:
        free += h.free_rank
        tors.extend(h.torsion)
    return HomologyGroup(free, tuple(d for d in normalize_diagonal(tors) if d > 1))


def homology(d_k: SparseIntMatrix, d_kplus1: SparseIntMatrix, check: bool = True) -> HomologyGroup:
    """ker d_k / im d_{k+1} for integer matrices with d_k @ d_{k+1} = 0."""
    if d_k.ncols != d_kplus1.nrows:
        raise ValueError(f"d_k has {d_k.ncols} columns but d_(k+1) has {d_kplus1.nrows} rows")
    if check and not (d_k @ d_kplus1).is_zero():
        raise MalformedComplex("boundary maps do not compose to zero")
    incoming = smith_normal_form(d_kplus1)
    rank_k = smith_normal_form(d_k).rank
    return HomologyGroup(d_k.ncols - rank_k - incoming.rank, incoming.torsion)


def torsion_witness(cycle: Mapping[int, int] | list[int], d_k: SparseIntMatrix, d_kplus1: SparseIntMatrix) -> int:
    """Order of the class of ``cycle`` in ker d_k / im d_{k+1}.

    Returns 1 for a boundary, m >= 2 for a torsion class of order m and 0 when
    no nonzero multiple is a boundary.  The order equals the index of
    im d_{k+1} inside im d_{k+1} + Z*cycle, which is the ratio of the products
    of the nonzero invariant factors of the two generating matrices.
    """
    vec = dict(cycle) if isinstance(cycle, Mapping) else {i: v for i, v in enumerate(cycle) if v}
    if any(i < 0 or i >= d_k.ncols for i in vec):
        raise ValueError("cycle index outside the chain group")
    if d_k.apply(vec):
        raise ValueError("the chain is not a cycle")
    if not vec:
        return 1
    col = SparseIntMatrix(d_kplus1.nrows, 1, {(i, 0): v for i, v in vec.items()})
    before = smith_normal_form(d_kplus1)
    after = smith_normal_form(d_kplus1.hstack(col))
    if after.rank > before.rank:
        return 0
    return prod(before.factors) // prod(after.factors)


# --- bigraded tables ------------------------------------------------------

@dataclass
class BiGradedTable:
    kind: str
    graph: str
    cells: dict = field(default_factory=dict)  # (k, l) -> HomologyGroup
    metadata: dict = field(default_factory=dict)

    def __getitem__(self, kl) -> HomologyGroup:
        return self.cells.get(kl, HomologyGroup())

    def ranks(self) -> dict:
        return {kl: h.free_rank for kl, h in self.cells.items()}

    def support(self) -> dict:
        """Nonzero cells only."""
        return {kl: h for kl, h in sorted(self.cells.items()) if not h.is_zero}

    def has_torsion(self) -> bool:
        return any(h.torsion for h in self.cells.values())

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "graph": self.graph,
            "cells": {f"({k},{l})": h.to_dict() for (k, l), h in sorted(self.cells.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "BiGradedTable":
        cells = {}
        for key, v in data["cells"].items():
            k, l = (int(x) for x in key.strip("()").split(","))
            cells[(k, l)] = HomologyGroup(v["rank"], tuple(v["torsion"]))
        return cls(data["kind"], data["graph"], cells)

    def format(self) -> str:
        """ASCII table with l down the side and k across, nonzero cells only."""
        if not self.cells:
            return f"{self.kind}: (empty)"
        ks = sorted({k for k, _ in self.cells})
        ls = sorted({l for _, l in self.cells})
        width = max([len(str(h)) for h in self.cells.values()] + [3])
        lines = ["l\\k " + " ".join(f"{k:>{width}}" for k in ks)]
        for l in ls:
            row = []
            for k in ks:
                h = self.cells.get((k, l))
                row.append(f"{'' if h is None or h.is_zero else str(h):>{width}}")
            lines.append(f"{l:>3} " + " ".join(row))
        return "\n".join(lines)


def _kind_mode(kind: str) -> str:
    try:
        return KINDS[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown homology kind {kind!r}") from None


def _summands(g: Graph, k: int, ell: int, mode: str, endpoints):
    if k < 0:
        return {}
    if endpoints is None:
        return paths_by_endpoints(g, k, ell, mode)
    basis = enumerate_paths(g, k, ell, mode, endpoints=endpoints)
    return {tuple(endpoints): basis} if len(basis) else {}


def _boundary(g, upper: PathBasis | None, lower: PathBasis | None, n_lower: int, n_upper: int):
    if upper is None or lower is None or not len(upper) or not len(lower):
        return SparseIntMatrix(n_lower, n_upper)
    return boundary_matrix(g, upper, lower)


def grading_cell(g: Graph, kind: str, k: int, ell: int, endpoints=None) -> HomologyGroup:
    """One homology group, assembled from its endpoint summands."""
    return _cells_for_length(g, _kind_mode(kind), [k], ell, endpoints)[k]


def length_slice(g: Graph, kind: str, ks: Iterable[int], ell: int, endpoints=None) -> dict:
    """Groups for several k at one length, sharing bases and SNFs between neighbours."""
    return _cells_for_length(g, _kind_mode(kind), sorted(set(ks)), ell, endpoints)


def _cells_for_length(g: Graph, mode: str, ks: list[int], ell: int, endpoints) -> dict:
    needed = sorted({j for k in ks for j in (k - 1, k, k + 1) if j >= 0})
    bases = {j: _summands(g, j, ell, mode, endpoints) for j in needed}
    snf_cache: dict = {}

    def boundary_snf(j, ab):
        # SNF of d_j restricted to summand ab: C_j(ab) -> C_{j-1}(ab)
        key = (j, ab)
        if key not in snf_cache:
            upper = bases.get(j, {}).get(ab)
            lower = bases.get(j - 1, {}).get(ab)
            m = _boundary(g, upper, lower, len(lower) if lower else 0, len(upper) if upper else 0)
            snf_cache[key] = smith_normal_form(m)
        return snf_cache[key]

    out = {}
    for k in ks:
        groups = []
        for ab, basis in bases.get(k, {}).items():
            out_rank = boundary_snf(k, ab).rank
            incoming = boundary_snf(k + 1, ab)
            groups.append(HomologyGroup(len(basis) - out_rank - incoming.rank, incoming.torsion))
        out[k] = direct_sum(groups)
    return out


def table(g: Graph, kind: str, k_range: Iterable[int], l_range: Iterable[int],
          endpoints: tuple[int, int] | None = None, graph_id: str | None = None) -> BiGradedTable:
    """Homology groups for every (k, l) in the given ranges.

    Cells with k > l (and, for EMH, k > |V| - 1) are zero without computation
    and are still reported so the table covers the requested rectangle.
    """
    mode = _kind_mode(kind)
    ks = sorted(set(k_range))
    result = BiGradedTable(kind.upper(), graph_id or g.content_hash()[:16])
    for ell in sorted(set(l_range)):
        live = [k for k in ks if k <= ell and not (mode == "eulerian" and k > g.n - 1)]
        cells = _cells_for_length(g, mode, live, ell, endpoints) if live else {}
        for k in ks:
            result.cells[(k, ell)] = cells.get(k, HomologyGroup())
    if endpoints is not None:
        result.metadata["endpoints"] = list(endpoints)
    return result


def chain_rank_table(g: Graph, kind: str, k_range, l_range) -> dict:
    mode = _kind_mode(kind)
    return {(k, l): len(enumerate_paths(g, k, l, mode)) for k in k_range for l in l_range}


# --- Euler characteristic ---------------------------------------------------

@dataclass(frozen=True)
class EulerCheck:
    passed: bool
    homology_side: tuple
    series_side: tuple

    @property
    def residuals(self) -> tuple:
        return tuple(a - b for a, b in zip(self.homology_side, self.series_side))


def euler_check(g: Graph, trunc: int = 5) -> EulerCheck:
    """Compare sum_k (-1)^k rank MH_{k,l} with the q^l coefficient of the magnitude."""
    if not g.is_connected():
        raise ValueError("Euler characteristic check needs a connected graph")
    series = magnitude_series(g, trunc)
    lhs = []
    for ell in range(trunc + 1):
        cells = _cells_for_length(g, "plain", list(range(ell + 1)), ell, None)
        lhs.append(sum((-1) ** k * h.free_rank for k, h in cells.items()))
    return EulerCheck(tuple(lhs) == tuple(series), tuple(lhs), tuple(series))
