"""Derived obstruction catalog: disc-planar 5-boundary configurations with
independent boundary, nonempty interior, and no boundary-good wheel in any...
rather, in *some* disc embedding.

A configuration enters the catalog iff it admits at least one disc embedding
(boundary on the outer face) without a boundary-good wheel; configurations
whose every embedding carries a good wheel are the ones the wheel machinery
handles directly.  The catalog is derived by enumeration, not transcribed:
interior graphs of order 1..max_interior are attached to five independent
boundary vertices in all inequivalent ways, filtered by the entry predicate
and deduplicated by boundary-respecting canonical form.

The interior degree filter is configurable: "flagged" (default) admits
interior vertices of configuration-degree 3 and records them as deficient;
"strict" requires degree >= 4, the bound forced on interior vertices by an
ambient 4-connected host.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .graphs import Graph, GraphError, canonical_form, canonical_graph, mask_of
from .corpus import all_graphs
from .embedding import (DiscEmbedding, component_plane_embeddings, is_disc_planar,
                        trace_faces)
from .wheels import Wheel, find_good_wheels

BOUNDARY = 5


@dataclass(frozen=True)
class ObstructionEntry:
    """One catalog member: the configuration with its distinguished boundary."""

    graph: Graph
    boundary: tuple[int, ...]
    interior_order: int
    canonical_id: str
    deficient: tuple[int, ...] = ()  # interior vertices of degree 3

    def to_json(self) -> dict:
        return {"id": self.canonical_id, "n": self.graph.n,
                "boundary": list(self.boundary),
                "edges": [[u, v] for u, v in self.graph.edges()],
                "deficient": list(self.deficient)}

    @classmethod
    def from_json(cls, obj: dict) -> "ObstructionEntry":
        g = Graph(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])
        return cls(g, tuple(int(b) for b in obj["boundary"]),
                   g.n - len(obj["boundary"]), obj["id"],
                   tuple(int(v) for v in obj.get("deficient", ())))


def save_catalog(entries: Sequence[ObstructionEntry], path) -> None:
    with open(path, "w") as fh:
        json.dump([e.to_json() for e in entries], fh, indent=1)


def load_catalog(path) -> list[ObstructionEntry]:
    with open(path) as fh:
        return [ObstructionEntry.from_json(obj) for obj in json.load(fh)]


# ---------------------------------------------------------------------------
# the entry predicate
# ---------------------------------------------------------------------------

def _wheel_candidate(g: Graph, w: int, boundary_mask: int) -> bool:
    """Necessary condition for a good wheel at w in some embedding: a cycle
    through all of N(w), avoiding w and boundary non-neighbours of w."""
    nbrs = g.nbr[w]
    if len(nbrs) < 3:
        return False
    need = set(nbrs)
    banned = (boundary_mask & ~g.mask[w]) | (1 << w)
    start = nbrs[0]

    def dfs(cur: int, visited: int, hit: int) -> bool:
        for nxt in g.nbr[cur]:
            if nxt == start and hit == len(need) and visited.bit_count() >= 3:
                return True
            if visited >> nxt & 1 or banned >> nxt & 1:
                continue
            if dfs(nxt, visited | 1 << nxt, hit + (1 if nxt in need else 0)):
                return True
        return False

    return dfs(start, 1 << start, 1)


def good_wheel_free_embedding_exists(g: Graph, boundary: Sequence[int]) -> bool:
    """Does some disc embedding (boundary on the outer face) carry no
    boundary-good wheel?  False also when g is not disc-planar at all.

    Components are independent: each needs an embedding of its own without a
    good wheel among its interior vertices.
    """
    bset = set(boundary)
    bmask = mask_of(boundary)
    if not is_disc_planar(g, sorted(bset))[0]:
        return False
    for comp in g.component_masks():
        if comp.bit_count() == 1:
            continue
        if not _component_good_wheel_free(g, comp, bset, bmask):
            return False
    return True


def _component_good_wheel_free(g: Graph, comp: int, bset: set[int],
                               bmask: int) -> bool:
    verts = [v for v in range(g.n) if comp >> v & 1]
    interior = [v for v in verts if v not in bset]
    candidates = [w for w in interior if _wheel_candidate(g, w, bmask)]
    if not candidates:
        return True  # no embedding can form a good wheel here
    sub, idx = g.induced(verts)
    cand_sub = [idx[w] for w in candidates]
    want = frozenset(idx[v] for v in verts if v in bset)
    tset = set(want)
    for part in component_plane_embeddings(sub, (1 << sub.n) - 1):
        rotation = [()] * sub.n
        for v, rot in part.items():
            rotation[v] = rot
        faces = trace_faces(rotation)
        # good wheels do not depend on the outer-face choice; an embedding is
        # good-wheel-free iff every good center lands ON the chosen outer face
        centers = _good_wheel_centers(sub, faces, cand_sub, tset)
        cset = set(centers)
        for f in faces:
            if want <= f.vertices and cset <= f.vertices:
                return True
    return False


def _good_wheel_centers(sub: Graph, faces, candidates: Sequence[int],
                        tset: set[int]) -> list[int]:
    """Candidate centers whose cofacial closure is a t-good wheel in this
    rotation system (outer-face independent; orientation irrelevant)."""
    out = []
    for w in candidates:
        nbrs = sub.nbr[w]
        if len(nbrs) < 3:
            continue
        vset: set[int] = set()
        eset: set[frozenset] = set()
        for f in faces:
            if w in f.vertices:
                vset |= f.vertices
                eset |= f.edges
        rim_v = vset - {w}
        rim_e = [e for e in eset if w not in e]
        if len(rim_e) != len(rim_v):
            continue
        deg: dict[int, int] = {v: 0 for v in rim_v}
        adj: dict[int, int] = {}
        ok = True
        for e in rim_e:
            for v in e:
                deg[v] += 1
                if deg[v] > 2:
                    ok = False
                    break
            if not ok:
                break
        if not ok or any(d != 2 for d in deg.values()):
            continue
        # connectivity of the rim: walk from any vertex
        adj2: dict[int, list[int]] = {v: [] for v in rim_v}
        for e in rim_e:
            a, b = tuple(e)
            adj2[a].append(b)
            adj2[b].append(a)
        start = next(iter(rim_v))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj2[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(rim_v):
            continue
        if all(v in set(nbrs) for v in tset & vset):
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _interior_graphs(k: int) -> list[tuple[Graph, list[tuple[int, ...]]]]:
    """Canonical interior graphs of order k with their automorphism groups."""
    out = []
    for g in all_graphs(k):
        edges = {tuple(sorted(e)) for e in g.edges()}
        autos = []
        for perm in itertools.permutations(range(k)):
            if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
                autos.append(perm)
        out.append((g, autos))
    return out


def _boundary_mask_maps() -> list[list[int]]:
    """For each permutation of the 5 boundary vertices, the induced map on
    attachment masks (precomputed lookup tables)."""
    maps = []
    for perm in itertools.permutations(range(BOUNDARY)):
        table = [0] * (1 << BOUNDARY)
        for m in range(1 << BOUNDARY):
            t = 0
            for b in range(BOUNDARY):
                if m >> b & 1:
                    t |= 1 << perm[b]
            table[m] = t
        maps.append(table)
    return maps


_MASK_MAPS: Optional[list[list[int]]] = None


def _product_minimal(tup: tuple[int, ...], autos: list[tuple[int, ...]],
                     mask_maps: list[list[int]]) -> bool:
    """Is the attachment tuple the minimum of its orbit under
    Aut(interior) x Sym(boundary)?"""
    t0 = tup[0]
    k = len(tup)
    for perm in autos:
        permuted = tup if perm is None else tuple(tup[perm[i]] for i in range(k))
        for table in mask_maps:
            c0 = table[permuted[0]]
            if c0 > t0:
                continue
            if c0 < t0:
                return False
            cand = tuple(table[m] for m in permuted)
            if cand < tup:
                return False
    return True


def _attachment_tuples(interior: Graph, autos: list[tuple[int, ...]],
                       min_degree: int, mask_maps: list[list[int]],
                       budget: int) -> Iterator[tuple[int, ...]]:
    """Attachment tuples surviving the cheap orbit-invariant filters (edge
    budget, every boundary vertex attached) and minimal in their orbit."""
    k = interior.n
    pop = [m.bit_count() for m in range(1 << BOUNDARY)]
    options = []
    for v in range(k):
        need = max(0, min_degree - interior.degree(v))
        options.append([m for m in range(1 << BOUNDARY) if pop[m] >= need])
    nontrivial = [p for p in autos if p != tuple(range(k))]
    full = (1 << BOUNDARY) - 1
    for tup in itertools.product(*options):
        cover = 0
        total = 0
        for m in tup:
            cover |= m
            total += pop[m]
        if cover != full or total > budget:
            continue
        ok = True
        for perm in nontrivial:
            if tuple(tup[perm[i]] for i in range(k)) < tup:
                ok = False
                break
        if ok and _product_minimal(tup, autos, mask_maps):
            yield tup


def _build_config(interior: Graph, tup: tuple[int, ...]) -> Graph:
    k = interior.n
    edges = [(BOUNDARY + u, BOUNDARY + v) for u, v in interior.edges()]
    for i, m in enumerate(tup):
        for b in range(BOUNDARY):
            if m >> b & 1:
                edges.append((b, BOUNDARY + i))
    return Graph(BOUNDARY + k, edges)


def enumerate_obstructions(max_interior: int, interior_degree: str = "flagged",
                           ) -> list[ObstructionEntry]:
    """All catalog entries with interior order 1..max_interior, sorted by
    canonical id.  Deterministic; two runs produce identical catalogs."""
    if max_interior > 5:
        raise GraphError("max_interior <= 5 (desk scale)")
    if interior_degree not in ("flagged", "strict"):
        raise GraphError("interior_degree must be 'flagged' or 'strict'")
    min_degree = 4 if interior_degree == "strict" else 3
    global _MASK_MAPS
    if _MASK_MAPS is None:
        _MASK_MAPS = _boundary_mask_maps()
    entries: dict[str, ObstructionEntry] = {}
    for k in range(1, max_interior + 1):
        max_edges = 3 * (BOUNDARY + k) - 8  # disc-planarity edge budget
        for interior, autos in _interior_graphs(k):
            budget = max_edges - interior.edge_count()
            for tup in _attachment_tuples(interior, autos, min_degree,
                                          _MASK_MAPS, budget):
                g = _build_config(interior, tup)
                if not good_wheel_free_embedding_exists(g, range(BOUNDARY)):
                    continue
                key = canonical_form(g, range(BOUNDARY))
                if key in entries:
                    continue
                cg, perm = canonical_graph(g, range(BOUNDARY))
                deficient = tuple(v for v in range(BOUNDARY, cg.n)
                                  if cg.degree(v) == 3)
                entries[key] = ObstructionEntry(
                    cg, tuple(range(BOUNDARY)), k, key, deficient)
    return [entries[k] for k in sorted(entries)]


def _boundary_degrees(tup: tuple[int, ...]) -> list[int]:
    return [sum(m >> b & 1 for m in tup) for b in range(BOUNDARY)]


def match_obstruction(catalog: Sequence[ObstructionEntry], g: Graph,
                      boundary: Sequence[int]) -> Optional[str]:
    """Canonical id of the entry isomorphic to (g, boundary as a set), if any."""
    if len(set(boundary)) != BOUNDARY:
        raise GraphError(f"boundary must have {BOUNDARY} distinct vertices")
    try:
        key = canonical_form(g, boundary)
    except GraphError:
        return None
    ids = {e.canonical_id for e in catalog}
    return key if key in ids else None
