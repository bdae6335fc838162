"""k-separations: enumeration, validation, disc-planar side filtering."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graphs import CheckResult, Graph, GraphError, mask_of
from .embedding import DiscEmbedding, is_disc_planar


@dataclass(frozen=True)
class Separation:
    """Two edge-disjoint subgraphs covering the host, meeting in the cut.

    Sides are (vertex set, edge set) pairs; every host edge belongs to
    exactly one side, edges inside the cut to `cut_edges_side`.
    """

    host: Graph
    cut: tuple[int, ...]
    side1_vertices: frozenset[int]
    side2_vertices: frozenset[int]
    edges1: frozenset[tuple[int, int]]
    edges2: frozenset[tuple[int, int]]
    cut_edges_side: int = 1

    def k(self) -> int:
        return len(self.cut)

    def side_vertices(self, side: int) -> frozenset[int]:
        return self.side1_vertices if side == 1 else self.side2_vertices

    def side_graph(self, side: int) -> tuple[Graph, dict[int, int]]:
        """Dense-id copy of one side; returns (graph, old id -> new id)."""
        vs = sorted(self.side_vertices(side))
        idx = {v: i for i, v in enumerate(vs)}
        edges = self.edges1 if side == 1 else self.edges2
        return Graph(len(vs), [(idx[u], idx[v]) for u, v in edges]), idx

    def swapped(self) -> "Separation":
        return Separation(self.host, self.cut, self.side2_vertices,
                          self.side1_vertices, self.edges2, self.edges1,
                          cut_edges_side=3 - self.cut_edges_side)

    def validate(self) -> CheckResult:
        g = self.host
        cutset = set(self.cut)
        if cutset != set(self.side1_vertices & self.side2_vertices):
            return CheckResult(False, "cut differs from the side intersection")
        if self.side1_vertices | self.side2_vertices != set(range(g.n)):
            return CheckResult(False, "sides do not cover the vertex set")
        all_edges = {tuple(sorted(e)) for e in g.edges()}
        e1 = {tuple(sorted(e)) for e in self.edges1}
        e2 = {tuple(sorted(e)) for e in self.edges2}
        if e1 & e2:
            return CheckResult(False, "sides share an edge")
        if e1 | e2 != all_edges:
            return CheckResult(False, "edge assignment does not cover the host")
        for (u, v) in e1:
            if u not in self.side1_vertices or v not in self.side1_vertices:
                return CheckResult(False, f"edge ({u},{v}) leaves side1")
        for (u, v) in e2:
            if u not in self.side2_vertices or v not in self.side2_vertices:
                return CheckResult(False, f"edge ({u},{v}) leaves side2")
        if self.side1_vertices <= self.side2_vertices and e1 <= e2:
            return CheckResult(False, "side1 contained in side2")
        if self.side2_vertices <= self.side1_vertices and e2 <= e1:
            return CheckResult(False, "side2 contained in side1")
        return CheckResult(True)

    def to_json(self) -> dict:
        return {"cut": list(self.cut),
                "side1": sorted(self.side1_vertices),
                "side2": sorted(self.side2_vertices),
                "cut_edges_side": self.cut_edges_side}


def enumerate_k_separations(g: Graph, k: int, min_side_order: int = 0,
                            cut_edges_side: int = 1) -> Iterator[Separation]:
    """Every k-separation up to side swap.

    For each k-subset whose removal disconnects the host, the components are
    grouped into two nonempty sides (the component of the smallest vertex
    stays on side1 to kill the swap symmetry, except that cut-internal edges
    live on `cut_edges_side`); sides below `min_side_order` are skipped.
    """
    if k >= g.n:
        raise GraphError(f"k={k} must be below the order {g.n}")
    for cut in itertools.combinations(range(g.n), k):
        cutmask = mask_of(cut)
        comps = g.component_masks(removed=cutmask)
        if len(comps) < 2:
            continue
        yield from _separations_for_cut(g, cut, comps, min_side_order,
                                        cut_edges_side)


def _separations_for_cut(g: Graph, cut: tuple[int, ...], comps: list[int],
                         min_side_order: int, cut_edges_side: int,
                         ) -> Iterator[Separation]:
    cutset = set(cut)
    cut_edges = [(u, v) for u, v in itertools.combinations(sorted(cutset), 2)
                 if g.has_edge(u, v)]
    c = len(comps)
    for pick in range(1 << (c - 1)):
        groupA = [comps[0]] + [comps[i] for i in range(1, c) if pick >> (i - 1) & 1]
        groupB = [comps[i] for i in range(1, c) if not pick >> (i - 1) & 1]
        if not groupB:
            continue
        maskA = 0
        for m in groupA:
            maskA |= m
        maskB = 0
        for m in groupB:
            maskB |= m
        v1 = frozenset(v for v in range(g.n) if maskA >> v & 1) | cutset
        v2 = frozenset(v for v in range(g.n) if maskB >> v & 1) | cutset
        if len(v1) < min_side_order or len(v2) < min_side_order:
            continue
        e1, e2 = set(), set()
        for u, v in g.edges():
            if maskA >> u & 1 or maskA >> v & 1:
                e1.add((u, v))
            elif maskB >> u & 1 or maskB >> v & 1:
                e2.add((u, v))
        for e in cut_edges:
            (e1 if cut_edges_side == 1 else e2).add(e)
        yield Separation(g, cut, v1, v2, frozenset(e1), frozenset(e2),
                         cut_edges_side=cut_edges_side)


def independent_cut(sep: Separation, side: int) -> bool:
    """No edge of the chosen side joins two cut vertices."""
    cutset = set(sep.cut)
    edges = sep.edges1 if side == 1 else sep.edges2
    return not any(u in cutset and v in cutset for u, v in edges)


def planar_side_separations(g: Graph, k: int, min_side_order: int = 0,
                            ) -> Iterator[tuple[Separation, DiscEmbedding]]:
    """Separations whose side1 is disc-planar on the cut, embedding attached.

    Each enumerated separation is tried in both orientations; an orientation
    is yielded whenever its side1 qualifies, so a separation with two planar
    sides appears twice (once per orientation).
    """
    for sep in enumerate_k_separations(g, k, min_side_order):
        for cand in (sep, sep.swapped()):
            if len(cand.side1_vertices) < max(min_side_order, 1):
                continue
            side, idx = cand.side_graph(1)
            ok, emb = is_disc_planar(side, [idx[v] for v in cand.cut])
            if ok:
                yield cand, emb
