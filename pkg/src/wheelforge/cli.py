"""Command-line front end.

Verdict-style subcommands exit 0 on an affirmative answer (planar, colorable,
paths found, ...), 1 on a negative verdict or counterexample, 2 on usage
errors.  Graphs stream in as graph6 lines or edge-list JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable, Optional

from .graphs import (Graph, GraphError, canonical_form, emit_graph6,
                     parse_graph6)
from .embedding import is_disc_planar, is_planar
from .separations import enumerate_k_separations, planar_side_separations
from .wheels import Wheel, find_good_wheels, is_extendable, wheel_at
from .linkage import LinkageInstance, solve_two_linkage
from .subdivision import find_k5_subdivision
from .coloring import four_color
from .obstructions import enumerate_obstructions, save_catalog
from . import harness
from .corpus import all_graphs_upto, four_connected_atlas, sample_4connected


def _read_graphs(path: str, fmt: str) -> list[Graph]:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    if fmt == "json":
        data = json.loads(text)
        if isinstance(data, dict):
            data = [data]
        return [Graph.from_edge_json(obj) for obj in data]
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line == ">>graph6<<":
            continue
        graphs.append(parse_graph6(line))
    return graphs


def _vertex_list(raw: Optional[str]) -> Optional[list[int]]:
    if raw is None:
        return None
    try:
        return [int(x) for x in raw.split(",") if x != ""]
    except ValueError:
        raise GraphError(f"expected comma-separated vertex ids, got {raw!r}")


def _emit(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj))
    else:
        if isinstance(obj, dict):
            print(" ".join(f"{k}={v}" for k, v in obj.items()))
        else:
            print(obj)


def _persist(outdir: Optional[str], g: Graph, payload: dict) -> None:
    if not outdir:
        return
    key = canonical_form(g) if g.n <= 12 else emit_graph6(g)
    safe = "".join(ch if ch.isalnum() or ch in "-_" else f"_{ord(ch):02x}"
                   for ch in key)
    path = Path(outdir)
    path.mkdir(parents=True, exist_ok=True)
    (path / f"{safe}.json").write_text(json.dumps(payload, indent=1))


def _corpus_for_verify(args) -> Iterable[Graph]:
    if args.input:
        return _read_graphs(args.input, args.format)
    if args.lemma == "THM1":
        graphs = four_connected_atlas(min(args.nmax, 8))
        for n in range(9, args.nmax + 1):
            graphs.extend(sample_4connected(n, args.samples, args.seed + n))
        return graphs
    return list(all_graphs_upto(args.nmax))


def main(argv: Optional[list[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="wheelforge",
        description="wheels, disc embeddings, 2-linkages and K5-subdivisions "
                    "in small graphs")
    ap.add_argument("--input", "-i", default=None,
                    help="input file (graph6 lines or edge-list JSON), '-' for stdin")
    ap.add_argument("--format", choices=("graph6", "json"), default="graph6")
    ap.add_argument("--boundary", default=None,
                    help="comma-separated boundary vertex ids")
    ap.add_argument("--out", default=None,
                    help="directory for per-instance certificate files")
    ap.add_argument("--json", action="store_true", help="machine-readable stdout")
    ap.add_argument("--jobs", type=int, default=1,
                    help="parallel workers for verify corpora")
    ap.add_argument("--seed", type=int, default=2026)
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("planarity")
    p = sub.add_parser("disc-planarity")
    p.add_argument("--cyclic", action="store_true",
                   help="boundary order is a fixed cyclic order")
    p = sub.add_parser("separations")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min-side", type=int, default=0)
    p.add_argument("--planar-side", action="store_true",
                   help="only separations with disc-planar side1")
    sub.add_parser("wheels")
    p = sub.add_parser("extend")
    p.add_argument("--center", type=int, required=True)
    p.add_argument("--s", default=None, help="mandatory boundary endpoints")
    p = sub.add_parser("linkage")
    p.add_argument("--terminals", required=True, help="s1,s2,t1,t2")
    sub.add_parser("k5")
    sub.add_parser("color")
    p = sub.add_parser("obstructions")
    p.add_argument("--max-interior", type=int, default=4)
    p.add_argument("--degree-mode", choices=("flagged", "strict"),
                   default="flagged")
    p = sub.add_parser("verify")
    p.add_argument("lemma", choices=harness.LEMMA_IDS)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--max-interior", type=int, default=3)
    p.add_argument("--samples", type=int, default=50,
                   help="per-order sample size for generated THM1 corpora")

    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except (GraphError, OSError, json.JSONDecodeError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


def _need_graphs(args) -> list[Graph]:
    if not args.input:
        raise GraphError("--input is required for this subcommand")
    graphs = _read_graphs(args.input, args.format)
    if not graphs:
        raise GraphError("no graphs in input")
    return graphs


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "planarity":
        verdict = True
        for g in _need_graphs(args):
            res = is_planar(g)
            verdict &= res.planar
            out = {"graph6": emit_graph6(g), "planar": res.planar}
            if args.json and res.rotation is not None:
                out["rotation"] = [list(r) for r in res.rotation]
            if not res.planar:
                out["note"] = res.note
            _emit(out, args.json)
        return 0 if verdict else 1

    if cmd == "disc-planarity":
        boundary = _vertex_list(args.boundary)
        if not boundary:
            raise GraphError("--boundary is required")
        verdict = True
        for g in _need_graphs(args):
            ok, emb = is_disc_planar(g, boundary, fixed_cyclic_order=args.cyclic)
            verdict &= ok
            out = {"graph6": emit_graph6(g), "disc_planar": ok}
            if ok and args.json:
                out.update(emb.to_json())
            _emit(out, args.json)
            if ok:
                _persist(args.out, g, {"embedding": emb.to_json()})
        return 0 if verdict else 1

    if cmd == "separations":
        found = 0
        for g in _need_graphs(args):
            if args.planar_side:
                items = [(sep, emb) for sep, emb in
                         planar_side_separations(g, args.k, args.min_side)]
                for sep, emb in items:
                    _emit({**sep.to_json(), "embedding": emb.to_json()} if args.json
                          else sep.to_json(), args.json)
            else:
                items = list(enumerate_k_separations(g, args.k, args.min_side))
                for sep in items:
                    _emit(sep.to_json(), args.json)
            found += len(items)
            _persist(args.out, g, {"separations": found})
        return 0 if found else 1

    if cmd == "wheels":
        boundary = _vertex_list(args.boundary)
        if not boundary:
            raise GraphError("--boundary is required")
        total = 0
        for g in _need_graphs(args):
            ok, emb = is_disc_planar(g, boundary)
            wheels = find_good_wheels(emb, set(boundary)) if ok else []
            total += len(wheels)
            _emit({"graph6": emit_graph6(g), "disc_planar": ok,
                   "good_wheels": [w.to_json() for w in wheels]}, args.json)
            _persist(args.out, g, {"good_wheels": [w.to_json() for w in wheels]})
        return 0 if total else 1

    if cmd == "extend":
        boundary = _vertex_list(args.boundary)
        mandatory = _vertex_list(args.s) or []
        if not boundary:
            raise GraphError("--boundary is required")
        all_ok = True
        for g in _need_graphs(args):
            ok, emb = is_disc_planar(g, boundary)
            if not ok:
                raise GraphError("input is not disc-planar on the boundary")
            wl = wheel_at(emb, args.center)
            if not isinstance(wl, Wheel):
                raise GraphError(f"no wheel at {args.center}: {wl.reason}")
            res = is_extendable(emb, wl, list(emb.boundary), mandatory)
            from .graphs import PathSystem
            if isinstance(res, PathSystem):
                _emit({"extendable": True, **res.to_json()}, args.json)
                _persist(args.out, g, {"extension": res.to_json()})
            else:
                all_ok = False
                _emit({"extendable": False, **res.to_json()}, args.json)
        return 0 if all_ok else 1

    if cmd == "linkage":
        ts = _vertex_list(args.terminals)
        if not ts or len(ts) != 4:
            raise GraphError("--terminals must list s1,s2,t1,t2")
        all_paths = True
        for g in _need_graphs(args):
            res = solve_two_linkage(LinkageInstance(g, *ts))
            all_paths &= res.kind == "paths"
            _emit(res.to_json(), args.json)
            _persist(args.out, g, res.to_json())
        return 0 if all_paths else 1

    if cmd == "k5":
        found_all = True
        for g in _need_graphs(args):
            cert = find_k5_subdivision(g)
            if cert is None:
                found_all = False
                _emit({"graph6": emit_graph6(g), "k5_subdivision": None}, args.json)
            else:
                _emit({"graph6": emit_graph6(g), **cert.to_json()}, args.json)
                _persist(args.out, g, cert.to_json())
        return 0 if found_all else 1

    if cmd == "color":
        all_colorable = True
        for g in _need_graphs(args):
            col = four_color(g)
            if col is None:
                all_colorable = False
                _emit({"graph6": emit_graph6(g), "four_colorable": False}, args.json)
            else:
                _emit({"graph6": emit_graph6(g), "four_colorable": True,
                       **col.to_json()}, args.json)
                _persist(args.out, g, col.to_json())
        return 0 if all_colorable else 1

    if cmd == "obstructions":
        catalog = enumerate_obstructions(args.max_interior, args.degree_mode)
        if args.out:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            save_catalog(catalog, Path(args.out) / "catalog.json")
        _emit([e.to_json() for e in catalog] if args.json
              else f"{len(catalog)} catalog entries", args.json)
        return 0

    if cmd == "verify":
        bounds = {"nmax": args.nmax, "max_interior": args.max_interior}
        corpus = _corpus_for_verify(args)
        if args.jobs > 1 and args.lemma in ("L2LINK", "THM1"):
            report = _parallel_verify(args.lemma, corpus, bounds, args.jobs)
        else:
            report = harness.verify_lemma(args.lemma, corpus, bounds)
        _emit(report.to_json() if args.json else
              f"{report.lemma_id}: {report.verdict} "
              f"({report.instances_checked} instances, "
              f"{report.elapsed_s:.1f}s, outcomes {dict(report.outcomes)})",
              args.json)
        if args.out:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            (Path(args.out) / f"report_{args.lemma}.json").write_text(
                json.dumps(report.to_json(), indent=1))
        return 0 if report.verdict == "PASS" else 1

    raise GraphError(f"unknown command {cmd}")  # pragma: no cover


def _worker(payload):
    lemma, g6, bounds = payload
    g = parse_graph6(g6)
    rep = harness.verify_lemma(lemma, [g], bounds)
    return rep.to_json()


def _parallel_verify(lemma: str, corpus: Iterable[Graph], bounds: dict,
                     jobs: int) -> harness.LemmaReport:
    """Per-graph fan-out with a deterministic merge in input order."""
    import multiprocessing as mp

    items = [(lemma, emit_graph6(g), bounds) for g in corpus]
    merged = harness.LemmaReport(lemma, params=dict(bounds))
    with mp.Pool(jobs) as pool:
        for sub in pool.map(_worker, items, chunksize=8):
            merged.instances_checked += sub["instances_checked"]
            for k, v in sub["outcomes"].items():
                merged.outcomes[k] += v
            merged.counterexamples.extend(sub["counterexamples"])
            merged.elapsed_s += sub["elapsed_s"]
    return merged


if __name__ == "__main__":
    sys.exit(main())
