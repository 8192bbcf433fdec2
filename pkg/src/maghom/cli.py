"""Command-line front end: ``compute``, ``poset`` and ``verify``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .graphs import Graph, generate
from .homology import BiGradedTable, HomologyGroup, length_slice

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2
CACHE_ENV = "MAGHOM_CACHE"
DEFAULT_LMAX = 4


class InputError(Exception):
    pass


# --- cache -------------------------------------------------------------------------

class CellCache:
    """One JSON file per (graph, kind, k, l[, a, b]) cell, written atomically."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def _path(self, graph_hash: str, kind: str, k: int, ell: int, endpoints) -> Path:
        tail = f"_{endpoints[0]}_{endpoints[1]}" if endpoints is not None else ""
        return self.root / graph_hash[:2] / graph_hash / f"{kind}_{k}_{ell}{tail}.json"

    def get(self, graph_hash, kind, k, ell, endpoints=None) -> HomologyGroup | None:
        p = self._path(graph_hash, kind, k, ell, endpoints)
        try:
            data = json.loads(p.read_text())
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        return HomologyGroup(data["rank"], tuple(data["torsion"]))

    def put(self, graph_hash, kind, k, ell, group: HomologyGroup, endpoints=None) -> None:
        p = self._path(graph_hash, kind, k, ell, endpoints)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(group.to_dict(), fh)
        os.replace(tmp, p)


# --- input -------------------------------------------------------------------------

def load_graph(path: str | None, gen: str | None) -> Graph:
    if (path is None) == (gen is None):
        raise InputError("give exactly one of --graph FILE or --gen FAMILY:N")
    if gen is not None:
        family, _, n = gen.partition(":")
        try:
            return generate(family, int(n))
        except ValueError as exc:
            raise InputError(f"bad generator {gen!r}: {exc}") from None
    try:
        data = json.loads(Path(path).read_text())
        g = Graph.from_dict(data)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise InputError(f"malformed graph JSON in {path}: {exc}") from None
    if g.n == 0:
        raise InputError(f"{path}: empty vertex list")
    return g


def _endpoints(text: str | None, g: Graph):
    if text is None:
        return None
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise InputError("--endpoints expects two vertex indices, e.g. 0,4") from None
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise InputError(f"endpoints {a},{b} are not vertex indices of a {g.n}-vertex graph")
    return (a, b)


def _default_ranges(g: Graph, kind: str, kmax, lmax):
    if kind == "EMH":
        if lmax is None:
            if g.is_connected() and g.n > 1:
                from .formulas import support_bounds
                lmax = support_bounds(g).l_max
            else:
                lmax = max(g.n - 1, 0) * max(int(g.distances.diameter()), 1)
        if kmax is None:
            kmax = min(g.n - 1, lmax)
    else:
        if lmax is None:
            lmax = DEFAULT_LMAX if kmax is None else kmax
        if kmax is None:
            kmax = lmax
    if kmax < 0 or lmax < 0:
        raise InputError("--kmax and --lmax must be non-negative")
    return kmax, lmax


def _slice_job(args):
    g, kind, ks, ell, endpoints = args
    return ell, length_slice(g, kind, ks, ell, endpoints)


def compute_table(g: Graph, kind: str, kmax: int, lmax: int, endpoints=None,
                  cache: CellCache | None = None, jobs: int = 1) -> BiGradedTable:
    graph_hash = g.content_hash()
    result = BiGradedTable(kind, graph_hash[:16])
    todo = []
    for ell in range(lmax + 1):
        missing = []
        for k in range(kmax + 1):
            if k > ell or (kind == "EMH" and k > g.n - 1):
                result.cells[(k, ell)] = HomologyGroup()
                continue
            hit = cache.get(graph_hash, kind, k, ell, endpoints) if cache else None
            if hit is None:
                missing.append(k)
            else:
                result.cells[(k, ell)] = hit
        if missing:
            todo.append((g, kind, missing, ell, endpoints))
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = list(pool.map(_slice_job, todo))
    else:
        done = [_slice_job(t) for t in todo]
    for ell, cells in done:
        for k, h in cells.items():
            result.cells[(k, ell)] = h
            if cache:
                cache.put(graph_hash, kind, k, ell, h, endpoints)
    result.cells = dict(sorted(result.cells.items()))
    return result


# --- commands ----------------------------------------------------------------------

def cmd_compute(args) -> int:
    g = load_graph(args.graph, args.gen)
    kind = args.kind.upper()
    kmax, lmax = _default_ranges(g, kind, args.kmax, args.lmax)
    endpoints = _endpoints(args.endpoints, g)
    cache_dir = args.cache or os.environ.get(CACHE_ENV)
    cache = CellCache(cache_dir) if cache_dir else None
    t = compute_table(g, kind, kmax, lmax, endpoints, cache, max(1, args.jobs))
    payload = t.to_json()
    if args.out:
        _atomic_write(args.out, payload + "\n")
        print(t.format())
    else:
        print(payload)
    return EXIT_OK


def _atomic_write(path: str, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, target)


def _parse_blocks(text: str) -> list:
    # "12,34;13,24;14,23" or "1-2,3-4;..." for labels above 9
    blocks = []
    for chunk in text.split(";"):
        pairs = []
        for pair in chunk.split(","):
            pair = pair.strip()
            parts = pair.split("-") if "-" in pair else list(pair)
            if len(parts) != 2:
                raise InputError(f"cannot read pair {pair!r} in --blocks")
            pairs.append(tuple(int(x) for x in parts))
        blocks.append(pairs)
    return blocks


def cmd_poset(args) -> int:
    from .corpus import corpus
    from .posets import PosetError, RegularCW, adjoin_bounds, build_pk_sigma, face_poset, hasse_graph

    try:
        if args.which == "pk-sigma":
            try:
                sigma = [int(x) for x in args.sigma.split(",")]
            except ValueError:
                raise InputError("--sigma expects one-line notation such as 2,3,1") from None
            blocks = _parse_blocks(args.blocks) if args.blocks else None
            p = build_pk_sigma(args.k, sigma, blocks)
        elif args.which == "corpus":
            p = corpus(args.name)
        else:
            try:
                data = json.loads(Path(args.file).read_text())
            except (FileNotFoundError, json.JSONDecodeError) as exc:
                raise InputError(f"cannot read CW JSON {args.file}: {exc}") from None
            p = face_poset(RegularCW.from_dict(data))
    except PosetError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    hatted = adjoin_bounds(p)
    payload = json.dumps({"poset": p.to_dict(), "hatted": hatted.to_dict(),
                          "hasse_graph": hasse_graph(hatted).to_dict()}, separators=(",", ":"))
    if args.out:
        _atomic_write(args.out, payload + "\n")
        print(f"{p.n} elements, {hatted.n}-vertex hatted Hasse graph")
    else:
        print(payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run

    reports = run(args.suite)
    failed = 0
    for r in reports:
        if args.json:
            print(r.to_json())
        else:
            print(f"[{r.status.upper():6}] {r.check}")
        failed += r.status == "fail"
    return EXIT_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES

    ap = argparse.ArgumentParser(prog="maghom", description="Magnitude homology of graphs over the integers.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="bigraded MH/EMH/DMH table of a graph")
    c.add_argument("--graph", help="graph JSON file")
    c.add_argument("--gen", help="generator FAMILY:N with FAMILY in star, path, complete, cycle")
    c.add_argument("--kind", default="mh", type=str.lower, choices=["mh", "emh", "dmh"])
    c.add_argument("--kmax", type=int)
    c.add_argument("--lmax", type=int)
    c.add_argument("--endpoints", help="restrict to the (a,b) summand, e.g. 0,4")
    c.add_argument("--out", help="write result JSON here and print the table")
    c.add_argument("--cache", help=f"per-cell cache directory (default ${CACHE_ENV})")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_compute)

    p = sub.add_parser("poset", help="build posets and their hatted Hasse graphs")
    psub = p.add_subparsers(dest="which", required=True)
    pk = psub.add_parser("pk-sigma")
    pk.add_argument("--k", type=int, required=True)
    pk.add_argument("--sigma", required=True, help="derangement of 1..k-1 in one-line notation")
    pk.add_argument("--blocks", help='1-factorization, e.g. "12,34;13,24;14,23" (default round robin)')
    pc = psub.add_parser("corpus")
    pc.add_argument("name")
    pf = psub.add_parser("from-cw")
    pf.add_argument("file")
    for q in (pk, pc, pf):
        q.add_argument("--out")
    p.set_defaults(func=cmd_poset)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--json", action="store_true", help="one JSON report per line")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
