"""Core graph type: dense-id simple graphs, graph6 I/O, edits, routing, isomorphism.

Vertices are the integers 0..n-1.  Graphs are immutable after construction and
hashable, so they are safe to share between threads and to use as dict keys.
Neighbourhoods are kept both as sorted tuples and as integer bitmasks; the
bitmasks carry all the hot loops (BFS, flow, component splits).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(Exception):
    """Base class for errors raised by this package."""


class Graph6Error(GraphError):
    """Malformed graph6 record.  `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(GraphError):
    """Input exceeds the size range an operation supports."""


class InvalidEditError(GraphError):
    """Vertex/edge edit refers to deleted vertices or duplicates an edge."""


class InfeasibleError(GraphError):
    """Routing request that cannot be satisfied for counting reasons."""


class Graph:
    """Undirected simple graph with vertex set {0, ..., n-1}."""

    __slots__ = ("n", "nbr", "mask", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative order {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.mask = tuple(masks)
        self.nbr = tuple(tuple(_bits(m)) for m in masks)
        self._hash = hash((n, self.mask))

    # -- basic queries ----------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.nbr[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(t) for t in self.nbr) // 2

    def degree(self, v: int) -> int:
        return len(self.nbr[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mask[u] >> v & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"

    # -- derived graphs ----------------------------------------------------

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, self.edges() + [tuple(e) for e in extra])

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on `vertices`; returns (graph, old id -> new id)."""
        vs = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(vs)}
        edges = [(idx[u], idx[v]) for u in vs for v in self.nbr[u] if v in idx and u < v]
        return Graph(len(vs), edges), idx

    # -- connectivity helpers (bitmask) -------------------------------------

    def component_masks(self, removed: int = 0) -> list[int]:
        """Masks of the connected components of G minus the `removed` vertex mask."""
        alive = ((1 << self.n) - 1) & ~removed
        comps = []
        mask = self.mask
        while alive:
            seed = alive & -alive
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= mask[b.bit_length() - 1]
                frontier = nxt & alive & ~comp
                comp |= frontier
            comps.append(comp)
            alive &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    # -- JSON wire format ----------------------------------------------------

    def to_edge_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    @classmethod
    def from_edge_json(cls, obj: dict) -> "Graph":
        return cls(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])


def _bits(m: int) -> Iterator[int]:
    while m:
        b = m & -m
        m ^= b
        yield b.bit_length() - 1


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- common small graphs used all over the tests and demos -------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def wheel_graph(rim: int) -> Graph:
    """Rim cycle 0..rim-1 plus a hub vertex `rim` joined to every rim vertex."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (standard 6-bit packing, bias 63)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record", 0)
    data = s.encode("ascii", errors="replace")
    pos = 0

    def take(count: int) -> list[int]:
        nonlocal pos
        vals = []
        for _ in range(count):
            if pos >= len(data):
                raise Graph6Error("record truncated", pos)
            c = data[pos]
            if not (63 <= c <= 126):
                raise Graph6Error(f"byte {c!r} outside graph6 range", pos)
            vals.append(c - 63)
            pos += 1
        return vals

    first = take(1)[0]
    if first != 63:
        n = first
    else:
        nxt = take(1)[0]
        if nxt != 63:
            vals = [nxt] + take(2)
            n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        else:
            vals = take(6)
            n = 0
            for v in vals:
                n = (n << 6) | v

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    vals = take(nbytes)
    if pos != len(data):
        raise Graph6Error("trailing bytes after graph6 record", pos)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph of order <= 62 as a single-size-byte graph6 record."""
    if g.n > 62:
        raise UnsupportedSizeError(f"graph6 emitter supports order <= 62, got {g.n}")
    out = [g.n + 63]
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.mask[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = 0
                nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# edits
# ---------------------------------------------------------------------------

def apply_edit(
    g: Graph,
    deletions: Iterable[int] = (),
    additions: Iterable[tuple[int, int]] = (),
) -> tuple[Graph, dict[int, int]]:
    """Delete vertices, then add edges (given in the original ids).

    Vertex ids of the result are re-densified; the returned map sends each
    surviving original id to its new id.  Additions must join surviving
    vertices and must not duplicate surviving edges.
    """
    dels = set(deletions)
    for v in dels:
        if not (0 <= v < g.n):
            raise InvalidEditError(f"deleting nonexistent vertex {v}")
    survivors = [v for v in range(g.n) if v not in dels]
    idmap = {v: i for i, v in enumerate(survivors)}
    edges = {(idmap[u], idmap[v]) for u in survivors for v in g.nbr[u] if v in idmap and u < v}
    for u, v in additions:
        if u in dels or v in dels:
            raise InvalidEditError(f"edge addition ({u},{v}) references a deleted vertex")
        if u not in idmap or v not in idmap:
            raise InvalidEditError(f"edge addition ({u},{v}) out of range")
        if u == v:
            raise InvalidEditError(f"edge addition ({u},{v}) is a self-loop")
        e = (min(idmap[u], idmap[v]), max(idmap[u], idmap[v]))
        if e in edges:
            raise InvalidEditError(f"edge addition ({u},{v}) duplicates an existing edge")
        edges.add(e)
    return Graph(len(survivors), sorted(edges)), idmap


# ---------------------------------------------------------------------------
# path systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus the first violation found (empty when ok)."""

    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PathSystem:
    """An ordered list of simple paths, each a vertex sequence of the host."""

    paths: tuple[tuple[int, ...], ...]

    def __init__(self, paths: Iterable[Sequence[int]]):
        object.__setattr__(self, "paths", tuple(tuple(p) for p in paths))

    def validate(self, g: Graph, shared: frozenset[int] = frozenset()) -> CheckResult:
        """Check simplicity, edge membership and disjointness outside `shared`."""
        for idx, p in enumerate(self.paths):
            if not p:
                return CheckResult(False, f"path {idx} is empty")
            if len(set(p)) != len(p):
                return CheckResult(False, f"path {idx} repeats a vertex")
            for a, b in zip(p, p[1:]):
                if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                    return CheckResult(False, f"path {idx} uses non-edge ({a},{b})")
        for i, j in itertools.combinations(range(len(self.paths)), 2):
            common = set(self.paths[i]) & set(self.paths[j]) - shared
            if common:
                v = min(common)
                return CheckResult(False, f"paths {i} and {j} share vertex {v}")
        return CheckResult(True)

    def endpoints(self) -> list[int]:
        return [p[-1] for p in self.paths]

    def to_json(self) -> dict:
        return {"paths": [list(p) for p in self.paths]}

    @classmethod
    def from_json(cls, obj: dict) -> "PathSystem":
        return cls([[int(v) for v in p] for p in obj["paths"]])


# ---------------------------------------------------------------------------
# disjoint routing (unit vertex capacities via vertex splitting)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RoutingResult:
    """Outcome of a disjoint-paths request.

    kind is "paths" (system found), "cut" (certified vertex cut of size < k
    separating sources from sinks) or "no_routing" (mandatory-endpoint demand
    unsatisfiable; `cut` then holds the best separating structure found and
    `cut_certified` says whether it is a genuine source/sink vertex cut).
    """

    kind: str
    paths: Optional[PathSystem] = None
    cut: frozenset[int] = frozenset()
    cut_certified: bool = False

    def to_json(self) -> dict:
        if self.kind == "paths":
            return {"kind": "paths", **self.paths.to_json()}
        return {"kind": self.kind, "cut": sorted(self.cut),
                "cut_certified": self.cut_certified}


class _UnitFlow:
    """Tiny unit-capacity max-flow over split vertices, BFS augmentation."""

    def __init__(self, nnodes: int):
        self.head: list[list[int]] = [[] for _ in range(nnodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def arc(self, u: int, v: int, c: int) -> int:
        i = len(self.to)
        self.to.append(v)
        self.cap.append(c)
        self.head[u].append(i)
        self.to.append(u)
        self.cap.append(0)
        self.head[v].append(i + 1)
        return i

    def augment(self, src: int, snk: int, blocked: Optional[set[int]] = None) -> bool:
        prev: dict[int, int] = {src: -1}
        queue = [src]
        for u in queue:
            if u == snk:
                break
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and v not in prev and (blocked is None or i not in blocked):
                    prev[v] = i
                    queue.append(v)
        if snk not in prev:
            return False
        v = snk
        while v != src:
            i = prev[v]
            self.cap[i] -= 1
            self.cap[i ^ 1] += 1
            v = self.to[i ^ 1]
        return True

    def reachable(self, src: int, blocked: Optional[set[int]] = None) -> set[int]:
        seen = {src}
        queue = [src]
        for u in queue:
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and v not in seen and (blocked is None or i not in blocked):
                    seen.add(v)
                    queue.append(v)
        return seen


def _build_split_network(g: Graph, sources: set[int], sinks: set[int]):
    """SRC -> s_in; v_in -> v_out (cap 1); edges both ways; t_out -> SNK."""
    nin = lambda v: 2 * v
    nout = lambda v: 2 * v + 1
    src = 2 * g.n
    snk = 2 * g.n + 1
    fl = _UnitFlow(2 * g.n + 2)
    for v in range(g.n):
        fl.arc(nin(v), nout(v), 1)
    for u in range(g.n):
        for v in g.nbr[u]:
            fl.arc(nout(u), nin(v), 1)
    for s in sorted(sources):
        fl.arc(src, nin(s), 1)
    sink_arcs = {t: fl.arc(nout(t), snk, 1) for t in sorted(sinks)}
    return fl, src, snk, sink_arcs


def _decompose_paths(g: Graph, fl: _UnitFlow, src: int, snk: int) -> list[tuple[int, ...]]:
    """Read vertex paths off a saturated unit flow."""
    used_start = [i for i in fl.head[src] if fl.cap[i] == 0]
    paths = []
    for i in used_start:
        node = fl.to[i]  # some v_in
        path = []
        while node != snk:
            v = node // 2
            path.append(v)
            out = 2 * v + 1
            nxt = None
            for j in fl.head[out]:
                if j % 2 == 0 and fl.cap[j] == 0:
                    nxt = j
                    break
            # consume the arc so a later path cannot reuse it
            fl.cap[nxt] = -1
            node = fl.to[nxt]
        paths.append(tuple(path))
    return sorted(paths)


def disjoint_paths(
    g: Graph,
    sources: Iterable[int],
    sinks: Iterable[int],
    k: int,
    mandatory_sinks: Iterable[int] = (),
) -> RoutingResult:
    """k fully vertex-disjoint paths from `sources` to `sinks`, or a cut.

    Every mandatory sink must end up as the endpoint of some path.  A vertex
    in both sources and sinks may serve as a length-0 path.  With no mandatory
    sinks, failure certifies a vertex cut of size < k (Menger); with mandatory
    sinks, failure reports "no_routing" plus the best cut found.
    """
    S = set(sources)
    T = set(sinks)
    M = set(mandatory_sinks)
    if k < 1:
        raise InfeasibleError(f"k must be >= 1, got {k}")
    if not M <= T:
        raise InfeasibleError("mandatory sinks must be a subset of sinks")
    if k > len(S) or k > len(T) or len(M) > k:
        raise InfeasibleError(
            f"cannot route {k} disjoint paths with |sources|={len(S)}, "
            f"|sinks|={len(T)}, |mandatory|={len(M)}")
    for v in S | T:
        if not (0 <= v < g.n):
            raise InfeasibleError(f"terminal {v} out of range")

    fl, src, snk, sink_arcs = _build_split_network(g, S, T)
    frozen: set[int] = set()

    # phase 1: saturate the mandatory sinks, treating them as the only sinks
    if M:
        non_mandatory = {sink_arcs[t] for t in T - M}
        flow = 0
        while flow < len(M) and fl.augment(src, snk, blocked=non_mandatory):
            flow += 1
        if flow < len(M):
            reach = fl.reachable(src, blocked=non_mandatory)
            cut = _cut_from_reach(g, S, reach)
            return RoutingResult("no_routing", cut=frozenset(cut),
                                 cut_certified=False)
        # phase 2 may reroute anywhere except pulling flow back off a
        # mandatory terminal arc
        frozen = {sink_arcs[t] ^ 1 for t in M}

    flow = sum(1 for t in M)
    while flow < k and fl.augment(src, snk, blocked=frozen):
        flow += 1
    if flow == k:
        paths = _decompose_paths(g, fl, src, snk)
        return RoutingResult("paths", paths=PathSystem(paths))

    reach = fl.reachable(src, blocked=frozen)
    cut = _cut_from_reach(g, S, reach)
    if not M:
        return RoutingResult("cut", cut=frozenset(cut), cut_certified=True)
    certified = len(cut) < k and bool(vertex_cut_separates(g, cut, S, T))
    return RoutingResult("no_routing", cut=frozenset(cut), cut_certified=certified)


def _cut_from_reach(g: Graph, sources: set[int], reach: set[int]) -> set[int]:
    cut = set()
    for v in range(g.n):
        if 2 * v in reach and 2 * v + 1 not in reach:
            cut.add(v)
    for s in sources:
        if 2 * s not in reach:
            cut.add(s)
    return cut


def vertex_cut_separates(g: Graph, cut: Iterable[int], sources: Iterable[int],
                         sinks: Iterable[int]) -> CheckResult:
    """Does removing `cut` kill every source-to-sink path (endpoints count)?"""
    cutmask = mask_of(cut)
    smask = mask_of(sources) & ~cutmask
    tmask = mask_of(sinks) & ~cutmask
    if not smask or not tmask:
        return CheckResult(True)
    if smask & tmask:
        v = (smask & tmask).bit_length() - 1
        return CheckResult(False, f"vertex {v} is an uncut source and sink")
    for comp in g.component_masks(removed=cutmask):
        if comp & smask and comp & tmask:
            return CheckResult(False, "a component joins sources to sinks")
    return CheckResult(True)


def max_disjoint_paths(g: Graph, sources: Iterable[int], sinks: Iterable[int]) -> int:
    """Maximum number of fully vertex-disjoint source-to-sink paths."""
    S, T = set(sources), set(sinks)
    if not S or not T:
        return 0
    fl, src, snk, _ = _build_split_network(g, S, T)
    flow = 0
    while fl.augment(src, snk):
        flow += 1
    return flow


def internally_disjoint_paths(g: Graph, s: int, t: int, k: int,
                              count_only: bool = False) -> RoutingResult:
    """k paths from s to t, disjoint except at the shared endpoints s and t.

    On failure the returned cut avoids {s, t}; it is a certified s-t separator
    whenever s and t are nonadjacent (Menger).  With `count_only` the paths
    are not decomposed and the result just reports how far routing got via
    the size of `paths.paths`.
    """
    if s == t:
        raise InfeasibleError("endpoints must differ")
    fl = _UnitFlow(2 * g.n)
    big = k + 1
    for w in range(g.n):
        fl.arc(2 * w, 2 * w + 1, big if w in (s, t) else 1)
    for a in range(g.n):
        for b in g.nbr[a]:
            fl.arc(2 * a + 1, 2 * b, 1)
    flow = 0
    while flow < k and fl.augment(2 * s, 2 * t + 1):
        flow += 1
    if flow >= k:
        if count_only:
            return RoutingResult("paths")
        return RoutingResult("paths", paths=_decompose_pair_paths(g, fl, s, t))
    # crossing split arcs name cut vertices directly; a saturated edge arc
    # crossing the cut is charged to its head vertex (its unit is in use)
    reach = fl.reachable(2 * s)
    cut = {v for v in range(g.n)
           if v not in (s, t) and 2 * v in reach and 2 * v + 1 not in reach}
    for u in range(g.n):
        if 2 * u + 1 in reach:
            for i in fl.head[2 * u + 1]:
                v, rem = fl.to[i] // 2, fl.cap[i]
                if i % 2 == 0 and rem == 0 and fl.to[i] not in reach \
                        and v not in (s, t):
                    cut.add(v)
    certified = not g.has_edge(s, t) and bool(
        vertex_cut_separates(g, cut, {s}, {t}))
    return RoutingResult("cut", cut=frozenset(cut), cut_certified=certified)


def _decompose_pair_paths(g: Graph, fl: _UnitFlow, s: int, t: int) -> PathSystem:
    paths = []
    for i in fl.head[2 * s + 1]:
        if i % 2 == 0 and fl.cap[i] == 0:  # saturated arc out of s
            path = [s]
            node = fl.to[i]
            fl.cap[i] = -1
            while True:
                v = node // 2
                path.append(v)
                if v == t:
                    break
                nxt = None
                for j in fl.head[2 * v + 1]:
                    if j % 2 == 0 and fl.cap[j] == 0:
                        nxt = j
                        break
                fl.cap[nxt] = -1
                node = fl.to[nxt]
            paths.append(tuple(path))
    return PathSystem(sorted(paths))


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff order > k and no vertex set of size < k disconnects g."""
    if g.n <= k:
        return False
    if k <= 0:
        return True
    if k == 1:
        return g.is_connected()
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if not g.has_edge(u, v)]
    if not pairs:
        return True  # complete graph, connectivity n-1 > k already checked
    return all(
        internally_disjoint_paths(g, u, v, k, count_only=True).kind == "paths"
        for u, v in pairs)


# ---------------------------------------------------------------------------
# canonical form (refinement + individualization search)
# ---------------------------------------------------------------------------

def canonical_form(g: Graph, boundary_labels: Optional[Sequence[int]] = None) -> str:
    """Canonical string; equal iff isomorphic respecting the boundary set.

    The boundary (when given) is a distinguished vertex set: isomorphisms must
    map boundary to boundary, but no cyclic order on it is fixed.  Canonical
    relabelings place boundary vertices first, so the string is simply the
    graph6 record of the relabeled graph plus the boundary size.
    """
    if g.n > 12:
        raise UnsupportedSizeError(f"canonical_form supports order <= 12, got {g.n}")
    b = sorted(set(boundary_labels)) if boundary_labels else []
    for v in b:
        if not (0 <= v < g.n):
            raise GraphError(f"boundary vertex {v} out of range")
    perm = _canonical_order(g, b)
    pos = {v: i for i, v in enumerate(perm)}
    canon = Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])
    return f"{emit_graph6(canon)}|b{len(b)}"


def canonical_graph(g: Graph, boundary_labels: Optional[Sequence[int]] = None) -> tuple[Graph, list[int]]:
    """Canonically relabeled copy plus the vertex order used (position -> old id)."""
    b = sorted(set(boundary_labels)) if boundary_labels else []
    perm = _canonical_order(g, b)
    pos = {v: i for i, v in enumerate(perm)}
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()]), perm


def _canonical_order(g: Graph, boundary: list[int]) -> list[int]:
    n = g.n
    if n == 0:
        return []
    bmask = mask_of(boundary)
    if boundary and len(boundary) < n:
        cells = [list(boundary), [v for v in range(n) if not bmask >> v & 1]]
    else:
        cells = [list(range(n))]
    cells = _refine(g, cells)

    best_sig: Optional[tuple] = None
    best_perm: Optional[list[int]] = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best_sig, best_perm
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = [c[0] for c in cells]
            sig = _adj_signature(g, perm)
            if best_sig is None or sig < best_sig:
                best_sig, best_perm = sig, perm
            return
        cell = cells[target]
        candidates = cell if not _homogeneous_cell(g, cell) else cell[:1]
        for v in candidates:
            rest = [u for u in cell if u != v]
            new_cells = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(g, new_cells))

    search(cells)
    return best_perm


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into the current cells, to a fixpoint."""
    mask = g.mask
    while True:
        cell_masks = [mask_of(c) for c in cells]
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            keyed: dict[tuple, list[int]] = {}
            for v in c:
                key = tuple((mask[v] & cm).bit_count() for cm in cell_masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(c)
            else:
                changed = True
                for key in sorted(keyed):
                    new_cells.append(keyed[key])
        cells = new_cells
        if not changed:
            return cells


def _homogeneous_cell(g: Graph, cell: list[int]) -> bool:
    """All members interchangeable by transpositions: identical outside
    neighbourhoods and the cell induces a clique or an independent set."""
    cmask = mask_of(cell)
    outside = {g.mask[v] & ~cmask for v in cell}
    if len(outside) != 1:
        return False
    inside = [g.mask[v] & cmask for v in cell]
    return all(m == 0 for m in inside) or \
        all(m == cmask & ~(1 << v) for v, m in zip(cell, inside))


def _adj_signature(g: Graph, perm: list[int]) -> tuple:
    pos = [0] * g.n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for v in perm:
        r = 0
        for u in g.nbr[v]:
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def are_isomorphic_brute(g: Graph, h: Graph,
                         g_boundary: Sequence[int] = (),
                         h_boundary: Sequence[int] = ()) -> bool:
    """All-permutations isomorphism oracle (test fixture scale)."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    gb, hb = set(g_boundary), set(h_boundary)
    if len(gb) != len(hb):
        return False
    hedges = {(min(u, v), max(u, v)) for u, v in h.edges()}
    for perm in itertools.permutations(range(h.n)):
        if any((perm[v] in hb) != (v in gb) for v in range(g.n)):
            continue
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in hedges
               for u, v in g.edges()):
            return True
    return False
