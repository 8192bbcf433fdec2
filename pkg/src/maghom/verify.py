"""Named verification suites; each returns a list of CheckReport."""

from __future__ import annotations

import random
import time
from functools import lru_cache

from .chains import asao_izumihara, boundary_matrix, enumerate_paths, simplicial_boundaries
from .corpus import NAMED_GRAPHS, PK_SIGMA_4, PK_SIGMA_6, corpus, whitney_h, whitney_k
from .formulas import (FAIL, PASS, REPORT, CheckReport, complete_formulas, emh_max_check,
                       max_eulerian_length, path_recurrence_check, star_formulas, support_bounds,
                       tree_diagonality_check)
from .graphs import Graph, complete, star
from .homology import HomologyGroup, euler_check, grading_cell, homology, table, torsion_witness
from .posets import adjoin_bounds, alpha_gamma_chains, hasse_graph, order_complex
from .sparse import SparseIntMatrix

SUITES = ("star", "complete", "trees", "whitney", "torsion-corpus", "euler", "ai-iso",
          "support", "path-recurrence", "properties")

WHITNEY_H = {(0, 0): 5, (1, 1): 10, (2, 2): 6, (2, 3): 20, (3, 4): 40, (3, 5): 32,
             (4, 5): 12, (4, 6): 60, (4, 7): 24}
WHITNEY_K = {(0, 0): 5, (1, 1): 10, (2, 2): 6, (2, 3): 16, (3, 4): 28, (3, 5): 16,
             (3, 6): 4, (3, 7): 2, (4, 6): 28, (4, 7): 36, (4, 8): 14}

EULER_SEED = 20240611


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# --- small-graph sources ---------------------------------------------------------

@lru_cache(maxsize=None)
def connected_graphs(max_vertices: int) -> tuple:
    """All connected graphs up to isomorphism with 1..max_vertices vertices."""
    import networkx as nx

    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= max_vertices and nx.is_connected(G):
            out.append(Graph(range(G.number_of_nodes()), G.edges()))
    return tuple(out)


@lru_cache(maxsize=None)
def trees(max_vertices: int) -> tuple:
    import networkx as nx

    out = [Graph([0])]
    for m in range(2, max_vertices + 1):
        for T in nx.nonisomorphic_trees(m):
            out.append(Graph(range(m), T.edges()))
    return tuple(out)


def euler_sample(size: int = 25, max_vertices: int = 6, seed: int = EULER_SEED) -> list[Graph]:
    pool = list(connected_graphs(max_vertices))
    return random.Random(seed).sample(pool, size)


def hatted_graph(name: str) -> Graph:
    """Hasse graph of a corpus poset with bounds adjoined; hat0 is vertex 0, hat1 the last."""
    return hasse_graph(adjoin_bounds(corpus(name)))


# --- suites ------------------------------------------------------------------------

def suite_star(ns=range(2, 7)) -> list[CheckReport]:
    out = []
    for n in ns:
        for kind in ("EMH", "DMH"):
            t = table(star(n), kind, range(0, n + 1), range(0, 2 * n))
            wrong = {f"({k},{l})": {"computed": str(h), "formula": star_formulas(n, k, l, kind)}
                     for (k, l), h in t.cells.items()
                     if h.torsion or h.free_rank != star_formulas(n, k, l, kind)}
            out.append(CheckReport(f"star S_{n} {kind}", _status(not wrong),
                                   {"cells": len(t.cells), "mismatches": wrong}))
    for n, want in ((4, 24), (2, 4)):
        got = grading_cell(star(n), "EMH", 2, 3)
        out.append(CheckReport(f"star S_{n} EMH_(2,3)", _status(got == HomologyGroup(want)),
                               {"computed": str(got), "expected": want}))
    return out


def suite_complete(ns=range(2, 7)) -> list[CheckReport]:
    out = []
    flagged = []
    for n in ns:
        g = complete(n)
        for kind in ("EMH", "DMH"):
            t = table(g, kind, range(0, n), range(0, n + 2))
            off = [f"({k},{l})" for (k, l) in t.support() if k != l]
            diag = {}
            for k in range(n):
                cmp = complete_formulas(n, k, kind)
                diag[k] = {"computed": str(t[(k, k)]), "oracle": cmp["oracle"], "published": cmp["published"]}
                if not cmp["agree"]:
                    flagged.append(f"{kind} K_{n} k={k}: formula {cmp['published']} vs count {cmp['oracle']}")
            ok = not off and all(t[(k, k)] == HomologyGroup(d["oracle"]) for k, d in diag.items())
            out.append(CheckReport(f"complete K_{n} {kind}", _status(ok), {"off_diagonal": off, "diagonal": diag}))
    out.append(CheckReport("complete formula vs count", REPORT,
                           {"discrepancies": len(flagged), "flagged": flagged}))
    return out


def suite_trees(max_vertices: int = 7) -> list[CheckReport]:
    out = []
    for t in trees(max_vertices):
        rep = tree_diagonality_check(t)
        rep.check = f"tree {sorted(t.edges)}"
        out.append(rep)
    return out


def suite_whitney() -> list[CheckReport]:
    out = []
    tables = {}
    for name, g, want in (("H", whitney_h(), WHITNEY_H), ("K", whitney_k(), WHITNEY_K)):
        sb = support_bounds(g)
        t = table(g, "EMH", range(0, sb.k_max + 1), range(0, sb.l_max + 2))
        got = {kl: h for kl, h in t.support().items()}
        ok = got == {kl: HomologyGroup(r) for kl, r in want.items()}
        tables[name] = got
        out.append(CheckReport(f"whitney EMH({name})", _status(ok),
                               {"computed": {f"({k},{l})": str(h) for (k, l), h in got.items()},
                                "l_max": sb.l_max}))
    mh_h = table(whitney_h(), "MH", range(0, 6), range(0, 6)).support()
    mh_k = table(whitney_k(), "MH", range(0, 6), range(0, 6)).support()
    out.append(CheckReport("whitney EMH differs, MH agrees", _status(tables["H"] != tables["K"] and mh_h == mh_k),
                           {"mh_cells_compared": len(mh_h)}))
    return out


def _top_summand(g: Graph, kind: str, k: int, ell: int) -> HomologyGroup:
    return grading_cell(g, kind, k, ell, endpoints=(0, g.n - 1))


def alpha_reports(tag: str, params: dict) -> list[CheckReport]:
    """Order complex witness, chain identity and transport of alpha into the Hasse graph."""
    out = []
    p = corpus(tag)
    oc = order_complex(p)
    alpha, gamma = alpha_gamma_chains(**params)
    identity = gamma.boundary() == 2 * alpha
    out.append(CheckReport(f"{tag} boundary(gamma) = 2 alpha", _status(identity),
                           {"alpha_terms": len(alpha), "gamma_terms": len(gamma)}))
    order = torsion_witness(alpha.to_vector(oc), oc.boundaries[1], oc.boundary_into(1))
    h1 = oc.homology(1)
    out.append(CheckReport(f"{tag} alpha has order 2 in H_1", _status(order == 2 and h1.contains_cyclic(2)),
                           {"order": order, "H_1": str(h1)}))
    g = hasse_graph(adjoin_bounds(p))
    for kind, mode in (("MH", "plain"), ("EMH", "eulerian")):
        ab = (0, g.n - 1)
        b3 = enumerate_paths(g, 3, 4, mode, ab)
        b2 = enumerate_paths(g, 2, 4, mode, ab)
        b4 = enumerate_paths(g, 4, 4, mode, ab)
        where = {lab: i for i, lab in enumerate(g.vertices)}
        vec = {}
        for (x, y), v in alpha.coeffs.items():
            vec[b3.index[(0, where[x], where[y], g.n - 1)]] = v
        d3 = boundary_matrix(g, b3, b2)
        d4 = boundary_matrix(g, b4, b3) if len(b4) else SparseIntMatrix(len(b3), 0)
        w = torsion_witness(vec, d3, d4)
        full = grading_cell(g, kind, 3, 4)
        out.append(CheckReport(f"{tag} Z_2 in {kind}_(3,4)", _status(w == 2 and full.contains_cyclic(2)),
                               {"alpha_order": w, "group": str(full)}))
    return out


def suite_torsion_corpus(include_large: bool = True) -> list[CheckReport]:
    out = []
    g = hatted_graph("rp2")
    for kind in ("MH", "EMH"):
        full = grading_cell(g, kind, 3, 4)
        top = _top_summand(g, kind, 3, 4)
        out.append(CheckReport(f"rp2 {kind}_(3,4)", _status(full.contains_cyclic(2) and top == HomologyGroup(0, (2,))),
                               {"vertices": g.n, "group": str(full), "hat_summand": str(top)}))
    out += alpha_reports("pk_sigma_4", PK_SIGMA_4)
    if include_large:
        out += alpha_reports("pk_sigma_6", PK_SIGMA_6)
    for name, (k, ell), p in (("moore_z3", (3, 4), 3), ("moore_z5", (3, 4), 5), ("lens_3_1", (3, 5), 3)):
        g = hatted_graph(name)
        for kind in ("MH", "EMH"):
            top = _top_summand(g, kind, k, ell)
            out.append(CheckReport(f"{name} {kind}_({k},{ell}) hat summand", _status(top.torsion == (p,)),
                                   {"group": str(top)}))
    # grading (4,5): torsion for G_4^sigma in MH only, none for the RP^2 graph
    g4 = hatted_graph("pk_sigma_4")
    mh = grading_cell(g4, "MH", 4, 5)
    emh = grading_cell(g4, "EMH", 4, 5)
    out.append(CheckReport("pk_sigma_4 (4,5): MH torsion, EMH free", _status(bool(mh.torsion) and emh.is_free),
                           {"MH": str(mh), "EMH": str(emh)}))
    rp = grading_cell(hatted_graph("rp2"), "MH", 4, 5)
    out.append(CheckReport("rp2 MH_(4,5) torsion-free", _status(rp.is_free), {"MH": str(rp)}))
    return out


def suite_euler(size: int = 25, trunc: int = 5) -> list[CheckReport]:
    graphs = [(f"sample {i} {sorted(g.edges)}", g) for i, g in enumerate(euler_sample(size))]
    graphs += [(name, make()) for name, make in NAMED_GRAPHS.items()]
    for name in ("pk_sigma_4", "rp2", "moore_z3", "moore_z5", "lens_3_1", "pk_sigma_6"):
        g = hatted_graph(name)
        if g.n <= 15:
            graphs.append((name, g))
    out = []
    for name, g in graphs:
        r = euler_check(g, trunc)
        out.append(CheckReport(f"euler {name}", _status(r.passed),
                               {"homology": list(r.homology_side), "series": list(r.series_side)}))
    return out


def relative_homology(K, Kp) -> dict[int, HomologyGroup]:
    bases, maps = simplicial_boundaries(K, Kp)
    out = {}
    for d in range(-1, len(bases) - 1):
        into = maps[d + 2] if d + 2 < len(maps) else SparseIntMatrix(len(bases[d + 1]), 0)
        out[d] = homology(maps[d + 1], into)
    return out


def ai_isomorphism(g: Graph, max_length: int) -> list[str]:
    """Cells where relative homology of the pair differs from the magnitude summand."""
    bad = []
    for a in range(g.n):
        for b in range(g.n):
            for mode, kind in (("plain", "MH"), ("eulerian", "EMH")):
                if mode == "eulerian" and a == b:
                    continue
                for ell in range(1, max_length + 1):
                    rel = relative_homology(*asao_izumihara(g, a, b, ell, mode))
                    for k in range(1, ell + 1):
                        mag = grading_cell(g, kind, k, ell, (a, b))
                        if rel.get(k - 2, HomologyGroup()) != mag:
                            bad.append(f"{kind} ({a},{b}) k={k} l={ell}: {rel.get(k - 2)} vs {mag}")
    return bad


def suite_ai_iso(max_vertices: int = 5, max_length: int = 4) -> list[CheckReport]:
    out = []
    for g in connected_graphs(max_vertices):
        bad = ai_isomorphism(g, max_length)
        out.append(CheckReport(f"ai-iso {sorted(g.edges)}", _status(not bad), {"n": g.n, "mismatches": bad[:5]}))
    return out


def suite_support(max_vertices: int = 6) -> list[CheckReport]:
    """Eulerian support bound and the top-corner group on every small connected graph."""
    out = []
    for g in connected_graphs(max_vertices):
        if g.n == 1:
            continue
        sb = support_bounds(g)
        exhaustive = max_eulerian_length(g)
        beyond = len(enumerate_paths(g, sb.k_max, sb.l_max + 1, "eulerian"))
        too_long = sum(len(enumerate_paths(g, k, sb.l_max + 1, "eulerian")) for k in range(1, sb.k_max + 1))
        corner = emh_max_check(g)
        ok = exhaustive == sb.l_max and beyond == 0 and too_long == 0 and corner.status == PASS
        out.append(CheckReport(f"support {sorted(g.edges)}", _status(ok),
                               {"k_max": sb.k_max, "l_max": sb.l_max, "exhaustive_l_max": exhaustive,
                                "corner": corner.details["emh"]}))
    return out


def whole_complex_check(g: Graph, max_length: int) -> list[str]:
    """Build each length slice without splitting by endpoints.

    Checks d o d = 0 there and compares its homology with the sum of the
    endpoint summands.
    """
    bad = []
    for mode, kind in (("plain", "MH"), ("eulerian", "EMH"), ("discriminant", "DMH")):
        for ell in range(0, max_length + 1):
            bases = {k: enumerate_paths(g, k, ell, mode) for k in range(0, ell + 2)}

            def d(k):
                if k == 0 or not len(bases[k]) or not len(bases[k - 1]):
                    return SparseIntMatrix(len(bases[k - 1]) if k else 0, len(bases[k]))
                return boundary_matrix(g, bases[k], bases[k - 1])

            maps = {k: d(k) for k in range(0, ell + 2)}
            for k in range(1, ell + 1):
                if not (maps[k] @ maps[k + 1]).is_zero():
                    bad.append(f"{kind} l={ell} k={k}: d o d != 0")
            for k in range(0, ell + 1):
                whole = homology(maps[k], maps[k + 1], check=False)
                split = grading_cell(g, kind, k, ell)
                if whole != split:
                    bad.append(f"{kind} ({k},{ell}): whole {whole} vs summands {split}")
    return bad


def suite_properties(max_vertices: int = 5, max_length: int = 4) -> list[CheckReport]:
    graphs = [(f"{sorted(g.edges)}", g) for g in connected_graphs(max_vertices)]
    graphs += [(name, make()) for name, make in NAMED_GRAPHS.items()]
    out = []
    for name, g in graphs:
        bad = whole_complex_check(g, max_length)
        out.append(CheckReport(f"properties {name}", _status(not bad), {"n": g.n, "problems": bad[:5]}))
    return out


def suite_path_recurrence(max_n: int = 5) -> list[CheckReport]:
    return [path_recurrence_check(n) for n in range(1, max_n + 1)]


RUNNERS = {
    "star": suite_star,
    "complete": suite_complete,
    "trees": suite_trees,
    "whitney": suite_whitney,
    "torsion-corpus": suite_torsion_corpus,
    "euler": suite_euler,
    "ai-iso": suite_ai_iso,
    "support": suite_support,
    "path-recurrence": suite_path_recurrence,
    "properties": suite_properties,
}


def run(suite: str) -> list[CheckReport]:
    if suite == "all":
        return [r for name in SUITES for r in run(name)]
    try:
        runner = RUNNERS[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}") from None
    start = time.perf_counter()
    reports = runner()
    for r in reports:
        r.details.setdefault("suite", suite)
    reports.append(CheckReport(f"{suite} summary", _status(all(r.ok for r in reports)),
                               {"checks": len(reports), "failed": sum(not r.ok for r in reports),
                                "seconds": round(time.perf_counter() - start, 2), "suite": suite}))
    return reports


__all__ = ["SUITES", "run", "connected_graphs", "trees", "euler_sample", "hatted_graph",
           "relative_homology", "ai_isomorphism", "alpha_reports", "whole_complex_check", "WHITNEY_H", "WHITNEY_K"]
