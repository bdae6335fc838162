"""Wheels in disc embeddings: extraction, goodness, extendability.

A wheel at an interior vertex w is the subgraph of everything cofacial with
w; it is only defined when the faces around w close up into a rim cycle.
Extendability routes four paths from w to the boundary that leave the wheel
right after their spoke neighbour; the search reduces to disjoint routing in
the host minus the non-neighbour rim vertices, followed by truncation at the
last spoke neighbour, which preserves endpoints and disjointness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graphs import (CheckResult, Graph, GraphError, InfeasibleError,
                     PathSystem, RoutingResult, disjoint_paths, mask_of)
from .embedding import DiscEmbedding, Face, orient_cycle_clockwise


@dataclass(frozen=True)
class Wheel:
    """Center plus clockwise rim cycle; spokes are the center's neighbours."""

    center: int
    rim: tuple[int, ...]
    spokes: tuple[int, ...]
    embedding: DiscEmbedding

    def vertices(self) -> frozenset[int]:
        return frozenset(self.rim) | {self.center}

    def rim_edges(self) -> frozenset[frozenset]:
        return frozenset(frozenset((a, b))
                         for a, b in zip(self.rim, self.rim[1:] + self.rim[:1]))

    def validate(self) -> CheckResult:
        g = self.embedding.host
        if len(self.spokes) < 3:
            return CheckResult(False, "fewer than 3 spokes")
        if set(self.spokes) != set(g.nbr[self.center]):
            return CheckResult(False, "spokes differ from the center's neighbourhood")
        if not set(self.spokes) <= set(self.rim):
            return CheckResult(False, "spoke endpoint off the rim")
        if len(set(self.rim)) != len(self.rim) or len(self.rim) < 3:
            return CheckResult(False, "rim is not a cycle")
        for a, b in zip(self.rim, self.rim[1:] + self.rim[:1]):
            if not g.has_edge(a, b):
                return CheckResult(False, f"rim uses non-edge ({a},{b})")
        return CheckResult(True)

    def to_json(self) -> dict:
        return {"center": self.center, "rim": list(self.rim),
                "spokes": sorted(self.spokes)}


@dataclass(frozen=True)
class WheelUndefined:
    """The cofacial closure of the candidate center is not a wheel."""

    center: int
    reason: str

    def __bool__(self) -> bool:
        return False


def wheel_at(e: DiscEmbedding, w: int) -> Union[Wheel, WheelUndefined]:
    """The wheel formed by the vertices and edges cofacial with w, if any.

    Raises when w lies on the outer face; returns a WheelUndefined verdict
    (not an error) when the cofacial closure violates a wheel invariant.
    """
    g = e.host
    if not (0 <= w < g.n):
        raise GraphError(f"vertex {w} out of range")
    outer = e.outer_walk().vertices
    if w in outer:
        raise GraphError(f"center {w} lies on the outer face")

    closure_vertices: set[int] = set()
    closure_edges: set[frozenset] = set()
    for f in e.faces():
        if w in f.vertices:
            closure_vertices |= set(f.vertices)
            closure_edges |= set(f.edges)

    spokes = tuple(sorted(g.nbr[w]))
    if len(spokes) < 3:
        return WheelUndefined(w, "center has degree < 3")
    rim_vertices = closure_vertices - {w}
    rim_edges = {fs for fs in closure_edges if w not in fs}
    # rim must be a single cycle through every cofacial vertex
    deg: dict[int, int] = {v: 0 for v in rim_vertices}
    adj: dict[int, list[int]] = {v: [] for v in rim_vertices}
    for fs in rim_edges:
        a, b = sorted(fs)
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if len(rim_edges) != len(rim_vertices):
        return WheelUndefined(w, "cofacial closure is not a single rim cycle")
    if any(d != 2 for d in deg.values()):
        bad = min(v for v, d in deg.items() if d != 2)
        return WheelUndefined(w, f"rim degree {deg[bad]} at vertex {bad}")
    start = min(rim_vertices)
    cycle = [start]
    prev = None
    while True:
        nxt = [x for x in adj[cycle[-1]] if x != prev]
        prev = cycle[-1]
        if not nxt:
            return WheelUndefined(w, "rim walk dead-ends")
        cycle.append(nxt[0])
        if cycle[-1] == start:
            cycle.pop()
            break
    if len(cycle) != len(rim_vertices):
        return WheelUndefined(w, "rim is disconnected")
    rim = orient_cycle_clockwise(e, cycle)
    i = rim.index(start)
    rim = rim[i:] + rim[:i]
    return Wheel(w, rim, spokes, e)


def is_good(wheel: Wheel, t: Iterable[int]) -> bool:
    """Every t-vertex lying on the wheel is a neighbour of the center."""
    tset = set(t)
    g = wheel.embedding.host
    nbrs = set(g.nbr[wheel.center])
    return all(v in nbrs for v in tset & wheel.vertices())


def find_good_wheels(e: DiscEmbedding, t: Iterable[int]) -> list[Wheel]:
    """All wheels at interior centers outside t that are t-good."""
    tset = set(t)
    outer = e.outer_walk().vertices
    out = []
    for w in range(e.host.n):
        if w in tset or w in outer:
            continue
        res = wheel_at(e, w)
        if isinstance(res, Wheel) and is_good(res, tset):
            out.append(res)
    return out


@dataclass(frozen=True)
class ExtendFailure:
    """No valid four-path extension exists; carries the separator found.

    `cut` lives in the reduced graph (host minus the non-neighbour rim
    vertices and the center); when `cut_certified` it separates the center's
    neighbourhood from the boundary there.
    """

    kind: str
    cut: frozenset[int]
    cut_certified: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"kind": self.kind, "cut": sorted(self.cut),
                "cut_certified": self.cut_certified, "detail": self.detail}


def verify_extension(wheel: Wheel, t: Sequence[int], s: Iterable[int],
                     ps: PathSystem) -> CheckResult:
    """Definitional re-check of a four-path extension certificate."""
    g = wheel.embedding.host
    w = wheel.center
    if len(ps.paths) != 4:
        return CheckResult(False, f"expected 4 paths, got {len(ps.paths)}")
    base = ps.validate(g, shared=frozenset({w}))
    if not base:
        return base
    wheel_vs = wheel.vertices()
    nbrs = set(g.nbr[w])
    ends = []
    for i, p in enumerate(ps.paths):
        if p[0] != w:
            return CheckResult(False, f"path {i} does not start at the center")
        if len(p) < 2:
            return CheckResult(False, f"path {i} never leaves the center")
        if p[1] not in nbrs:
            return CheckResult(False, f"path {i} second vertex {p[1]} is not a spoke neighbour")
        hits = [v for v in p[1:] if v in wheel_vs]
        if hits != [p[1]]:
            return CheckResult(False, f"path {i} meets the wheel at {hits}, not just its second vertex")
        if p[-1] not in set(t):
            return CheckResult(False, f"path {i} ends at {p[-1]}, off the boundary")
        ends.append(p[-1])
    if len(set(ends)) != 4:
        return CheckResult(False, "paths share an endpoint")
    missing = set(s) - set(ends)
    if missing:
        return CheckResult(False, f"mandatory vertex {min(missing)} is no endpoint")
    return CheckResult(True)


def is_extendable(e: DiscEmbedding, wheel: Wheel, t: Sequence[int],
                  s: Iterable[int] = (),
                  ) -> Union[PathSystem, ExtendFailure]:
    """Four paths from the center to t, each leaving the wheel at its spoke
    neighbour, pairwise meeting only at the center, covering every s-vertex
    as an endpoint; or the separating structure that forbids them.

    The certificate is the lexicographically smallest valid system, ordered
    by (sorted endpoints, then path sequences).
    """
    g = e.host
    w = wheel.center
    tlist = list(t)
    sset = set(s)
    if len(tlist) < 4:
        raise InfeasibleError(f"need |t| >= 4, got {len(tlist)}")
    if not sset <= set(tlist):
        raise InfeasibleError("s must be a subset of t")
    if len(sset) > 4:
        raise InfeasibleError("|s| <= 4 required")

    rim_nonnbrs = set(wheel.rim) - set(g.nbr[w])
    blocked = rim_nonnbrs | {w}
    sinks = [v for v in tlist if v not in blocked]
    if sset - set(sinks):
        return ExtendFailure("no_routing", frozenset(), False,
                             "a mandatory vertex is a non-neighbour rim vertex")
    sources = set(g.nbr[w])
    if len(sources) < 4 or len(sinks) < 4:
        return ExtendFailure("cut", frozenset(sources) if len(sources) < 4 else frozenset(sinks),
                             False, "fewer than 4 usable sources or sinks")

    sub, idmap = _reduced_graph(g, blocked)
    inv = {v: k for k, v in idmap.items()}
    red_sources = {idmap[v] for v in sources}
    red_sinks = {idmap[v] for v in sinks}
    red_mand = {idmap[v] for v in sset}
    res = disjoint_paths(sub, red_sources, red_sinks, 4, mandatory_sinks=red_mand)
    if res.kind != "paths":
        cut = frozenset(inv[v] for v in res.cut)
        return ExtendFailure(res.kind, cut, res.cut_certified)

    ps = _lex_min_extension(g, sub, idmap, inv, wheel, tlist, sset,
                            red_sources, red_sinks)
    check = verify_extension(wheel, tlist, sset, ps)
    if not check:  # pragma: no cover - construction invariant
        raise GraphError(f"extension certificate failed re-check: {check.detail}")
    return ps


def _reduced_graph(g: Graph, blocked: set[int]) -> tuple[Graph, dict[int, int]]:
    keep = [v for v in range(g.n) if v not in blocked]
    idmap = {v: i for i, v in enumerate(keep)}
    edges = [(idmap[u], idmap[v]) for u in keep for v in g.nbr[u]
             if v in idmap and u < v]
    return Graph(len(keep), edges), idmap


def _feasible(sub: Graph, sources: set[int], sinks: set[int],
              mandatory: set[int], k: int) -> bool:
    if k == 0:
        return not mandatory
    if len(sources) < k or len(sinks) < k:
        return False
    return disjoint_paths(sub, sources, sinks, k,
                          mandatory_sinks=mandatory).kind == "paths"


def _lex_min_extension(g: Graph, sub: Graph, idmap: dict[int, int],
                       inv: dict[int, int], wheel: Wheel, tlist: list[int],
                       sset: set[int], red_sources: set[int],
                       red_sinks: set[int]) -> PathSystem:
    """Smallest valid system by (sorted endpoints, path sequences).

    Endpoint set first: smallest 4-subset of t (sorted order) that is
    routable with every endpoint mandatory.  Then depth-first path search in
    lexicographic order with flow feasibility pruning; the first completion
    is the lexicographic minimum.
    """
    w = wheel.center
    usable = sorted(inv[v] for v in red_sinks)
    target_set: Optional[tuple[int, ...]] = None
    for combo in itertools.combinations(usable, 4):
        if not sset <= set(combo):
            continue
        if _feasible(sub, red_sources, {idmap[v] for v in combo},
                     {idmap[v] for v in combo}, 4):
            target_set = combo
            break
    assert target_set is not None

    full_paths: list[tuple[int, ...]] = []

    def rec(i: int, used: set[int]) -> bool:
        if i == 4:
            return True
        endpoint = target_set[i]
        remaining = {idmap[v] for v in target_set[i + 1:]}
        start_candidates = sorted(v for v in g.nbr[w] if v not in used)
        for path in _paths_lex(sub, idmap, inv, wheel, used, endpoint):
            used2 = used | set(path)
            rem_sources = {idmap[v] for v in g.nbr[w]
                           if v not in used2 and idmap.get(v) is not None}
            sub2, map2 = _reduced_graph(sub, {idmap[v] for v in used2 if v in idmap})
            rs = {map2[s2] for s2 in rem_sources if s2 in map2}
            rt = {map2[idmap[v]] for v in target_set[i + 1:] if idmap[v] in map2}
            if _feasible(sub2, rs, rt, rt, 3 - i):
                full_paths.append((w,) + path)
                if rec(i + 1, used2):
                    return True
                full_paths.pop()
        return False

    ok = rec(0, set())
    assert ok
    return PathSystem(full_paths)


def _paths_lex(sub: Graph, idmap: dict[int, int], inv: dict[int, int],
               wheel: Wheel, used: set[int], endpoint: int):
    """Simple paths (in original ids, without the center) from a spoke
    neighbour to `endpoint` inside the reduced graph, lexicographically,
    whose only wheel vertex is the first."""
    w = wheel.center
    wheel_vs = wheel.vertices()
    g = wheel.embedding.host

    def extend(path: list[int], visited: set[int]):
        cur = path[-1]
        if cur == endpoint:
            yield tuple(path)
            # an endpoint may also be passed through: only if endpoint were
            # not required terminal; the system needs it terminal, so stop
            return
        for nxt_red in sub.nbr[idmap[cur]]:
            nxt = inv[nxt_red]
            if nxt in visited or nxt in used:
                continue
            if nxt in wheel_vs:
                continue
            path.append(nxt)
            visited.add(nxt)
            yield from extend(path, visited)
            path.pop()
            visited.remove(nxt)

    for first in sorted(set(g.nbr[w]) - used):
        if first not in idmap:
            continue
        yield from extend([first], {first})
