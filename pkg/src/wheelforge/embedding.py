"""Disc embeddings: planarity, rotation systems, faces, cofaciality.

A rotation system lists each vertex's neighbours in cyclic order; faces are
traced with the convention next(u, v) = (v, successor of u in the rotation at
v).  A DiscEmbedding designates one face per component as facing the disc
boundary; those merge into the single outer face of the drawing, which also
absorbs isolated vertices.  "Clockwise" is pinned as the trace direction in
which the outer walk meets the stored boundary order.

`is_planar`/`is_disc_planar` decide via the apex reduction on top of the LR
planarity test; `plane_embeddings` is the exhaustive rotation-system
enumerator used as the independent second route and by the obstruction
catalog.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

import networkx as nx

from .graphs import CheckResult, Graph, GraphError, mask_of

Dart = tuple[int, int]
EdgeLike = Union[int, tuple[int, int], frozenset]


class EmbeddingError(GraphError):
    """Rotation system inconsistent with its host or its declared faces."""


@dataclass(frozen=True)
class Face:
    """A face boundary: closed dart walk plus any isolated vertices inside."""

    walk: tuple[Dart, ...]
    extra_vertices: frozenset[int] = frozenset()

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.walk) | self.extra_vertices

    @property
    def edges(self) -> frozenset[frozenset]:
        return frozenset(frozenset(d) for d in self.walk)

    def vertex_sequence(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.walk)

    def __len__(self) -> int:
        return len(self.walk)


def trace_faces(rotation: Sequence[Sequence[int]]) -> list[Face]:
    """All face walks of a rotation system, in deterministic trace order.

    Isolated vertices yield no faces here; DiscEmbedding accounts for them.
    """
    succ: dict[Dart, Dart] = {}
    for v, nbrs in enumerate(rotation):
        for i, u in enumerate(nbrs):
            succ[(u, v)] = (v, nbrs[(i + 1) % len(nbrs)])
    faces = []
    seen: set[Dart] = set()
    for v, nbrs in enumerate(rotation):
        for u in nbrs:
            start = (v, u)
            if start in seen:
                continue
            walk = []
            d = start
            while True:
                walk.append(d)
                seen.add(d)
                d = succ[d]
                if d == start:
                    break
            faces.append(Face(tuple(walk)))
    return faces


def _component_face_indices(g: Graph, faces: list[Face]) -> dict[int, list[int]]:
    """component id (min vertex) -> face indices of that component."""
    comp_of = {}
    for comp in g.component_masks():
        cid = (comp & -comp).bit_length() - 1
        for v in range(g.n):
            if comp >> v & 1:
                comp_of[v] = cid
    out: dict[int, list[int]] = {}
    for i, f in enumerate(faces):
        cid = comp_of[f.walk[0][0]]
        out.setdefault(cid, []).append(i)
    return out


class DiscEmbedding:
    """A drawing of the host in a closed disc with `boundary` on the circle.

    `rotation` is the per-vertex cyclic neighbour order; `outer_raw` picks the
    disc-facing face of each non-trivial component.  `faces()` merges those
    (plus isolated vertices) into one outer face, so face counts satisfy
    v - e + f = 1 + (number of components).
    """

    __slots__ = ("host", "rotation", "outer_raw", "boundary",
                 "_raw", "_faces", "_outer_index")

    def __init__(self, host: Graph, rotation: Sequence[Sequence[int]],
                 outer_raw: Iterable[int], boundary: Sequence[int]):
        self.host = host
        self.rotation = tuple(tuple(r) for r in rotation)
        self.outer_raw = tuple(sorted(outer_raw))
        self.boundary = tuple(boundary)
        self._raw: Optional[list[Face]] = None
        self._faces: Optional[list[Face]] = None
        self._outer_index: Optional[int] = None

    # -- faces -------------------------------------------------------------

    def raw_faces(self) -> list[Face]:
        if self._raw is None:
            self._raw = trace_faces(self.rotation)
        return self._raw

    def faces(self) -> list[Face]:
        """Merged face list: exactly one outer face shared by all components.

        With at most one non-trivial component the merged outer face keeps its
        raw trace index, so JSON round-trips; with several components it is
        listed first and the remaining faces follow in trace order.
        """
        if self._faces is not None:
            return self._faces
        raw = self.raw_faces()
        isolated = frozenset(v for v in range(self.host.n)
                             if self.host.degree(v) == 0)
        outer_set = set(self.outer_raw)
        walk: tuple[Dart, ...] = ()
        for i in sorted(outer_set):
            walk = walk + raw[i].walk
        merged = Face(walk, extra_vertices=isolated)
        if len(outer_set) <= 1:
            out = list(raw)
            if outer_set:
                idx = self.outer_raw[0]
                out[idx] = merged
            else:
                out = [merged]
                idx = 0
            self._faces = out
            self._outer_index = idx
            return out
        out = [merged]
        out.extend(f for i, f in enumerate(raw) if i not in outer_set)
        self._faces = out
        self._outer_index = 0
        return out

    @property
    def outer_face(self) -> int:
        self.faces()
        return self._outer_index

    def outer_walk(self) -> Face:
        return self.faces()[self.outer_face]

    # -- validation ----------------------------------------------------------

    def validate(self) -> CheckResult:
        g = self.host
        if len(self.rotation) != g.n:
            return CheckResult(False, "rotation length differs from order")
        for v in range(g.n):
            if sorted(self.rotation[v]) != list(g.nbr[v]):
                return CheckResult(False, f"rotation at {v} is not a neighbour permutation")
        raw = self.raw_faces()
        comp_faces = _component_face_indices(g, raw) if raw else {}
        comps = g.component_masks()
        # per-component Euler: planar sphere embedding
        for comp in comps:
            cid = (comp & -comp).bit_length() - 1
            nv = comp.bit_count()
            if nv == 1:
                continue
            ne = sum(len(g.nbr[v]) for v in range(g.n) if comp >> v & 1) // 2
            nf = len(comp_faces.get(cid, []))
            if nv - ne + nf != 2:
                return CheckResult(False, f"component at {cid} violates Euler (f={nf})")
        # one outer face per non-trivial component
        comp_of_face = {}
        for cid, idxs in comp_faces.items():
            for i in idxs:
                comp_of_face[i] = cid
        chosen = [comp_of_face.get(i) for i in self.outer_raw]
        nontrivial = [cid for cid, idxs in comp_faces.items() if idxs]
        if sorted(c for c in chosen if c is not None) != sorted(nontrivial) \
                or len(chosen) != len(nontrivial):
            return CheckResult(False, "outer faces do not pick one face per component")
        # boundary: present, on the outer face, per-component stored order
        if not self.boundary:
            return CheckResult(False, "boundary is empty")
        if len(set(self.boundary)) != len(self.boundary):
            return CheckResult(False, "boundary repeats a vertex")
        outer_vertices = self.outer_walk().vertices
        for b in self.boundary:
            if not (0 <= b < g.n):
                return CheckResult(False, f"boundary vertex {b} out of range")
            if b not in outer_vertices:
                return CheckResult(False, f"boundary vertex {b} not on the outer face")
        for comp in comps:
            stored = [b for b in self.boundary if comp >> b & 1]
            if len(stored) <= 1 or comp.bit_count() == 1:
                continue
            cid = (comp & -comp).bit_length() - 1
            idx = [i for i in self.outer_raw if comp_of_face.get(i) == cid]
            seq = raw[idx[0]].vertex_sequence()
            # each boundary vertex occupies one circle point: some choice of
            # occurrences along the cyclic walk must realize the stored order
            if not _order_realizable(seq, tuple(stored)):
                return CheckResult(False,
                                   f"boundary order {stored} not clockwise on outer walk {seq}")
        return CheckResult(True)

    # -- queries ---------------------------------------------------------------

    def faces_at(self, x: EdgeLike) -> list[int]:
        out = []
        for i, f in enumerate(self.faces()):
            if _incident(f, x):
                out.append(i)
        return out

    def to_json(self) -> dict:
        return {"rotation": [list(r) for r in self.rotation],
                "outer_face": self.outer_face,
                "boundary": list(self.boundary)}

    @classmethod
    def from_json(cls, host: Graph, obj: dict) -> "DiscEmbedding":
        rotation = [tuple(r) for r in obj["rotation"]]
        raw = trace_faces(rotation)
        comp_faces = _component_face_indices(host, raw) if raw else {}
        target = int(obj["outer_face"])
        if len(comp_faces) > 1:
            raise EmbeddingError("embedding JSON for hosts with several "
                                 "non-trivial components must be rebuilt "
                                 "via is_disc_planar")
        outer_raw = [target] if raw else []
        emb = cls(host, rotation, outer_raw, [int(b) for b in obj["boundary"]])
        check = emb.validate()
        if not check:
            raise EmbeddingError(f"embedding JSON invalid: {check.detail}")
        return emb


def _first_occurrences(seq: Sequence[int], keep: set[int]) -> tuple[int, ...]:
    out = []
    for v in seq:
        if v in keep and v not in out:
            out.append(v)
    return tuple(out)


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    a, b = tuple(a), tuple(b)
    return any(a[i:] + a[:i] == b for i in range(len(a)))


def _order_realizable(walk: Sequence[int], order: tuple[int, ...]) -> bool:
    """Can one occurrence of each `order` vertex be chosen along the cyclic
    walk so the choices appear in that cyclic order?  Greedy subsequence scan
    from every occurrence of the first vertex."""
    if len(order) <= 1:
        return all(v in walk for v in order)
    L = len(walk)
    starts = [i for i, v in enumerate(walk) if v == order[0]]
    for i in starts:
        j = i + 1
        limit = i + L
        ok = True
        for target in order[1:]:
            while j < limit and walk[j % L] != target:
                j += 1
            if j >= limit:
                ok = False
                break
            j += 1
        if ok:
            return True
    return False


def _incident(face: Face, x: EdgeLike) -> bool:
    if isinstance(x, int):
        return x in face.vertices
    e = frozenset(x)
    if len(e) != 2:
        raise GraphError(f"{x!r} is neither a vertex nor an edge")
    return e in face.edges


def faces(e: DiscEmbedding) -> list[Face]:
    """Merged faces of the embedding; raises on inconsistent rotations."""
    check = e.validate()
    if not check:
        raise EmbeddingError(check.detail)
    return e.faces()


def cofacial(e: DiscEmbedding, x: EdgeLike, y: EdgeLike) -> bool:
    """True iff some face (outer included) is incident with both elements."""
    for f in e.faces():
        if _incident(f, x) and _incident(f, y):
            return True
    return False


# ---------------------------------------------------------------------------
# planarity and disc planarity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: Optional[tuple[tuple[int, ...], ...]] = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.planar


def _to_nx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _rotation_from_nx(emb, n: int) -> tuple[tuple[int, ...], ...]:
    data = emb.get_data()
    return tuple(tuple(data.get(v, ())) for v in range(n))


def is_planar(g: Graph) -> PlanarityResult:
    """Planarity with a rotation-system witness or a Kuratowski note."""
    ok, emb = nx.check_planarity(_to_nx(g), counterexample=False)
    if ok:
        return PlanarityResult(True, _rotation_from_nx(emb, g.n))
    sub = nx.algorithms.planarity.check_planarity(_to_nx(g), counterexample=True)[1]
    kind = "K5" if sub.number_of_nodes() == 5 else "K3,3-like"
    return PlanarityResult(False, None,
                           f"contains a {kind} subdivision on vertices "
                           f"{sorted(sub.nodes())}")


def is_disc_planar(g: Graph, s: Sequence[int], fixed_cyclic_order: bool = False,
                   ) -> tuple[bool, Optional[DiscEmbedding]]:
    """Can g be drawn in a closed disc with s on the boundary circle?

    Unordered variant: planarity of g plus an apex joined to all of s.
    Ordered variant: additionally a cycle through s in the given order before
    apexing; the witness then shows s in that cyclic order (up to the mirror
    drawing, which the paper's notion cannot distinguish either).
    The returned embedding is re-validated on every call.
    """
    s = list(s)
    if not s:
        raise GraphError("boundary must be nonempty")
    if len(set(s)) != len(s):
        raise GraphError("boundary repeats a vertex")
    for v in s:
        if not (0 <= v < g.n):
            raise GraphError(f"boundary vertex {v} out of range")

    apex = g.n
    extra: list[tuple[int, int]] = []
    if fixed_cyclic_order and len(s) >= 3:
        for a, b in zip(s, s[1:] + s[:1]):
            if not g.has_edge(a, b):
                extra.append((a, b))
    h_edges = g.edges() + extra + [(v, apex) for v in s]
    h = Graph(g.n + 1, h_edges)
    ok, emb = nx.check_planarity(_to_nx(h), counterexample=False)
    if not ok:
        return False, None
    rot_h = _rotation_from_nx(emb, h.n)
    emb_out = _strip_apex(g, s, rot_h, set(map(frozenset, extra)))
    if fixed_cyclic_order and len(s) >= 3:
        want = tuple(s)
        cand = DiscEmbedding(g, emb_out.rotation, emb_out.outer_raw, want)
        if not cand.validate():
            mirrored = _mirror(emb_out, s)
            cand = DiscEmbedding(g, mirrored.rotation, mirrored.outer_raw, want)
            if not cand.validate():  # pragma: no cover - wheel rigidity
                raise EmbeddingError(
                    f"cyclic order {want} not realized on outer walk "
                    f"{emb_out.boundary}")
        emb_out = cand
    check = emb_out.validate()
    if not check:  # pragma: no cover - construction invariant
        raise EmbeddingError(f"apex reduction produced invalid embedding: {check.detail}")
    return True, emb_out


def _strip_apex(g: Graph, s: list[int], rot_h: tuple[tuple[int, ...], ...],
                extra_edges: set[frozenset]) -> DiscEmbedding:
    """Delete the apex (vertex g.n) and any helper cycle edges, then designate
    outer faces so that all of s lies on the merged outer face."""
    apex = g.n
    rotation = []
    for v in range(g.n):
        rotation.append(tuple(u for u in rot_h[v]
                              if u != apex and frozenset((u, v)) not in extra_edges))

    raw = trace_faces(rotation)
    dart_face = {}
    for i, f in enumerate(raw):
        for d in f.walk:
            dart_face[d] = i

    comp_faces = _component_face_indices(g, raw) if raw else {}
    comps = g.component_masks()
    outer_raw: list[int] = []

    # apex component: the faces around the apex merged into one when it left
    anchor = next((x for x in rot_h[apex] if g.degree(x) > 0), None)
    apex_cid = None
    if anchor is not None:
        nbrs = rot_h[anchor]
        after = nbrs[(nbrs.index(apex) + 1) % len(nbrs)]
        probe = after
        if probe == apex or frozenset((anchor, probe)) in extra_edges:
            # walk past deleted entries in the cyclic order
            k = nbrs.index(apex)
            for step in range(1, len(nbrs)):
                cand = nbrs[(k + step) % len(nbrs)]
                if cand != apex and frozenset((anchor, cand)) not in extra_edges:
                    probe = cand
                    break
            else:
                probe = None
        if probe is not None:
            outer_raw.append(dart_face[(anchor, probe)])
            for comp in comps:
                if comp >> anchor & 1:
                    apex_cid = (comp & -comp).bit_length() - 1

    smask = mask_of(s)
    for comp in comps:
        cid = (comp & -comp).bit_length() - 1
        if cid == apex_cid or comp.bit_count() == 1 or cid not in comp_faces:
            continue
        idxs = comp_faces[cid]
        want = comp & smask
        pick = None
        if want:
            for i in idxs:
                if mask_of(raw[i].vertices) & want == want:
                    pick = i
                    break
        outer_raw.append(pick if pick is not None else idxs[0])

    boundary = _boundary_order(g, s, raw, outer_raw)
    return DiscEmbedding(g, rotation, outer_raw, boundary)


def _mirror(e: DiscEmbedding, s: Sequence[int]) -> DiscEmbedding:
    """The mirror drawing: rotations reversed, outer faces re-identified,
    boundary re-derived from the mirrored outer walk."""
    raw = e.raw_faces()
    rotation_r = tuple(tuple(reversed(r)) for r in e.rotation)
    raw_r = trace_faces(rotation_r)
    walks = {frozenset(f.walk): i for i, f in enumerate(raw_r)}
    outer_r = [walks[frozenset((b, a) for a, b in raw[i].walk)]
               for i in e.outer_raw]
    boundary = _boundary_order(e.host, list(s), raw_r, outer_r)
    return DiscEmbedding(e.host, rotation_r, outer_r, boundary)


def _boundary_order(g: Graph, s: list[int], raw: list[Face],
                    outer_raw: list[int]) -> tuple[int, ...]:
    """Stored boundary order: s in first-occurrence order along the outer
    walks (components in outer_raw order), isolated s-vertices last."""
    sset = set(s)
    order: list[int] = []
    for i in outer_raw:
        order.extend(v for v in _first_occurrences(raw[i].vertex_sequence(), sset)
                     if v not in order)
    for v in s:
        if v not in order:
            order.append(v)
    return tuple(order)


# ---------------------------------------------------------------------------
# clockwise orientation and subpaths
# ---------------------------------------------------------------------------

def orient_cycle_clockwise(e: DiscEmbedding, cycle: Sequence[int]) -> tuple[int, ...]:
    """Return the cycle oriented clockwise in this drawing.

    Clockwise is calibrated by the outer walk: traversing any cycle clockwise,
    the traced face at each dart lies outside the cycle (on the side of the
    outer face), exactly as the disc boundary is traversed.
    """
    cyc = list(cycle)
    if len(cyc) < 3:
        raise GraphError("cycle must have length >= 3")
    if len(set(cyc)) != len(cyc):
        raise GraphError("cycle repeats a vertex")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not e.host.has_edge(a, b):
            raise GraphError(f"cycle uses non-edge ({a},{b})")
    cedges = {frozenset((a, b)) for a, b in zip(cyc, cyc[1:] + cyc[:1])}

    flist = e.faces()
    # dual reachability from the outer face without crossing the cycle
    edge_faces: dict[frozenset, list[int]] = {}
    for i, f in enumerate(flist):
        for edge in f.edges:
            edge_faces.setdefault(edge, []).append(i)
    outside = {e.outer_face}
    stack = [e.outer_face]
    while stack:
        i = stack.pop()
        for edge in flist[i].edges:
            if edge in cedges:
                continue
            for j in edge_faces[edge]:
                if j not in outside:
                    outside.add(j)
                    stack.append(j)

    raw = e.raw_faces()
    dart_raw = {}
    for i, f in enumerate(raw):
        for d in f.walk:
            dart_raw[d] = i
    raw_to_merged = _raw_to_merged_index(e)
    d = (cyc[0], cyc[1])
    if raw_to_merged[dart_raw[d]] in outside:
        return tuple(cyc)
    rev = tuple(reversed(cyc))
    drev = (rev[0], rev[1])
    if raw_to_merged[dart_raw[drev]] not in outside:
        raise EmbeddingError(f"cycle {cyc} has no clockwise side facing the outer face")
    return rev


def _raw_to_merged_index(e: DiscEmbedding) -> list[int]:
    raw = e.raw_faces()
    outer_set = set(e.outer_raw)
    e.faces()
    if len(outer_set) <= 1:
        return list(range(len(raw)))
    mapping = []
    nxt = 1
    for i in range(len(raw)):
        if i in outer_set:
            mapping.append(e.outer_face)
        else:
            mapping.append(nxt)
            nxt += 1
    return mapping


def clockwise_subpath(e: DiscEmbedding, cycle: Sequence[int], u: int, v: int,
                      ) -> tuple[int, ...]:
    """Subpath of the cycle from u to v in the drawing's clockwise order.

    Returns just (u,) when u == v, matching the paper's uCv convention.
    """
    cyc = orient_cycle_clockwise(e, cycle)
    if u not in cyc or v not in cyc:
        raise GraphError(f"{u} or {v} not on the cycle")
    if u == v:
        return (u,)
    i = cyc.index(u)
    out = [u]
    while out[-1] != v:
        i = (i + 1) % len(cyc)
        out.append(cyc[i])
    return tuple(out)


# ---------------------------------------------------------------------------
# exhaustive rotation-system enumeration (independent slow route)
# ---------------------------------------------------------------------------

def _cyclic_orders(nbrs: tuple[int, ...], halve: bool) -> list[tuple[int, ...]]:
    """All cyclic orders (first element fixed); reflections dropped if `halve`."""
    if len(nbrs) <= 2:
        return [nbrs]
    first, rest = nbrs[0], nbrs[1:]
    out = []
    for perm in itertools.permutations(rest):
        if halve and perm[0] > perm[-1]:
            continue  # the reversed order represents this one
        out.append((first,) + perm)
    return out


def component_plane_embeddings(g: Graph, comp_mask: int,
                               ) -> Iterator[dict[int, tuple[int, ...]]]:
    """All planar rotation systems of one connected component, up to mirror.

    Backtracking over per-vertex cyclic orders with two admissible prunes:
    the count of already-closed faces plus incoming darts of unassigned
    vertices bounds the final face count, and every face walk consumes at
    least 3 darts (2 when a degree-1 vertex exists).  A branch is cut only
    when no completion could reach the planar face count, so the enumeration
    stays exhaustive.
    """
    verts = [v for v in range(g.n) if comp_mask >> v & 1]
    if len(verts) == 1:
        yield {verts[0]: ()}
        return
    nv = len(verts)
    ne = sum(g.degree(v) for v in verts) // 2
    target = 2 - nv + ne
    min_face_len = 2 if any(g.degree(v) == 1 for v in verts) else 3
    order = sorted(verts, key=lambda v: -g.degree(v))
    choices = [_cyclic_orders(g.nbr[v], halve=(i == 0))
               for i, v in enumerate(order)]
    total_darts = 2 * ne

    assigned: dict[int, tuple[int, ...]] = {}

    def closed_faces() -> tuple[int, int]:
        """(number of closed faces, darts they consume) under `assigned`."""
        succ = {}
        for v, rot in assigned.items():
            for i, u in enumerate(rot):
                succ[(u, v)] = (v, rot[(i + 1) % len(rot)])
        seen = set()
        nfaces = 0
        ndarts = 0
        for start in succ:
            if start in seen:
                continue
            d = start
            closed = True
            walk = []
            while True:
                walk.append(d)
                d = succ.get(d)
                if d is None:
                    closed = False
                    break
                if d == start:
                    break
                if d in walk and d != start:  # pragma: no cover
                    closed = False
                    break
            if closed:
                new = [x for x in walk if x not in seen]
                if len(new) == len(walk):
                    nfaces += 1
                    ndarts += len(walk)
            seen.update(walk)
        return nfaces, ndarts

    def rec(i: int) -> Iterator[dict[int, tuple[int, ...]]]:
        if i == nv:
            nfaces, _ = closed_faces()
            if nfaces == target:
                yield dict(assigned)
            return
        v = order[i]
        for rot in choices[i]:
            assigned[v] = rot
            nfaces, ndarts = closed_faces()
            pending = sum(g.degree(order[j]) for j in range(i + 1, nv))
            bound = nfaces + min(pending,
                                 (total_darts - ndarts) // min_face_len)
            if bound >= target:
                yield from rec(i + 1)
            del assigned[v]

    yield from rec(0)


def plane_embeddings(g: Graph) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every planar rotation system of g (per component, mirror-reduced),
    as full rotation tuples.  Exhaustive; intended for small orders."""
    comps = [c for c in g.component_masks()]
    per_comp = []
    for c in comps:
        embs = list(component_plane_embeddings(g, c))
        if not embs:
            return
        per_comp.append(embs)
    for combo in itertools.product(*per_comp):
        rotation = [()] * g.n
        for part in combo:
            for v, rot in part.items():
                rotation[v] = rot
        yield tuple(rotation)


def component_face_masks(g: Graph, comp_mask: int) -> set[int]:
    """Vertex masks of faces achievable by some planar rotation system of the
    component.  One enumeration answers every boundary-subset query."""
    out: set[int] = set()
    for emb in component_plane_embeddings(g, comp_mask):
        rotation = [()] * g.n
        for v, rot in emb.items():
            rotation[v] = rot
        for f in trace_faces(rotation):
            out.add(mask_of(f.vertices))
    return out


def disc_verdict_by_oracle(g: Graph, s: Sequence[int]) -> bool:
    """Disc-planarity by exhaustive rotation-system search.

    Components are independent: each must admit a planar rotation system with
    some face containing its share of s (components sit side by side in the
    disc, isolated vertices anywhere).
    """
    sset = set(s)
    for comp in g.component_masks():
        verts = [v for v in range(g.n) if comp >> v & 1]
        want = sset & set(verts)
        if len(verts) == 1:
            continue
        found = False
        for emb in component_plane_embeddings(g, comp):
            rotation = [()] * g.n
            for v, rot in emb.items():
                rotation[v] = rot
            for f in trace_faces(rotation):
                if want <= f.vertices:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True
