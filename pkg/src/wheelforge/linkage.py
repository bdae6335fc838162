"""The two-disjoint-paths dichotomy with verifiable witnesses on both sides.

Under the coverage hypothesis (no <=3 vertices cut off a terminal-free
component), a graph either links s1->t1 and s2->t2 disjointly or embeds in a
disc with the terminals in the cyclic order s1, s2, t1, t2.  The solver
prefers the paths branch; the planar witness re-validates as an embedding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import CheckResult, Graph, GraphError, PathSystem, mask_of
from .embedding import DiscEmbedding, is_disc_planar


@dataclass(frozen=True)
class LinkageInstance:
    host: Graph
    s1: int
    s2: int
    t1: int
    t2: int

    def terminals(self) -> tuple[int, int, int, int]:
        return (self.s1, self.s2, self.t1, self.t2)

    def validate(self) -> CheckResult:
        ts = self.terminals()
        if len(set(ts)) != 4:
            return CheckResult(False, "terminals must be distinct")
        if any(not (0 <= v < self.host.n) for v in ts):
            return CheckResult(False, "terminal out of range")
        return CheckResult(True)


class HypothesisError(GraphError):
    """The coverage hypothesis fails; carries the violating cut."""

    def __init__(self, cut: tuple[int, ...], component: frozenset[int]):
        super().__init__(f"component {sorted(component)} of G-{list(cut)} "
                         "contains no terminal")
        self.cut = cut
        self.component = component


@dataclass(frozen=True)
class LinkageResult:
    """Exactly one branch set: disjoint paths, or the disc drawing witness."""

    paths: Optional[PathSystem] = None
    witness: Optional[DiscEmbedding] = None

    @property
    def kind(self) -> str:
        return "paths" if self.paths is not None else "planar"

    def to_json(self) -> dict:
        if self.paths is not None:
            return {"kind": "paths", **self.paths.to_json()}
        return {"kind": "planar", **self.witness.to_json()}


def hypothesis_holds(inst: LinkageInstance,
                     ) -> tuple[bool, Optional[tuple[tuple[int, ...], frozenset[int]]]]:
    """Every component of G-S meets the terminals, for all |S| <= 3.

    Returns (True, None) or (False, (S, component)) with the smallest S
    (then lexicographically first) and its terminal-free component.
    """
    check = inst.validate()
    if not check:
        raise GraphError(check.detail)
    g = inst.host
    tmask = mask_of(inst.terminals())
    for size in range(0, 4):
        for cut in itertools.combinations(range(g.n), size):
            cmask = mask_of(cut)
            for comp in g.component_masks(removed=cmask):
                if not comp & tmask:
                    component = frozenset(v for v in range(g.n) if comp >> v & 1)
                    return False, (cut, component)
    return True, None


def _all_paths_lex(g: Graph, s: int, t: int, banned: int) -> Iterator[tuple[int, ...]]:
    """Simple s-t paths avoiding `banned`, shortest first, then lexicographic."""
    paths_by_len: dict[int, list[tuple[int, ...]]] = {}

    def dfs(path: list[int], visited: int):
        cur = path[-1]
        if cur == t:
            paths_by_len.setdefault(len(path), []).append(tuple(path))
            return
        for nxt in g.nbr[cur]:
            if visited >> nxt & 1 or banned >> nxt & 1:
                continue
            path.append(nxt)
            dfs(path, visited | 1 << nxt)
            path.pop()

    if banned >> s & 1 or banned >> t & 1:
        return
    dfs([s], 1 << s)
    for length in sorted(paths_by_len):
        yield from sorted(paths_by_len[length])


def _reaches(g: Graph, s: int, t: int, banned: int) -> bool:
    if banned >> s & 1 or banned >> t & 1:
        return False
    frontier = 1 << s
    seen = frontier
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= g.mask[b.bit_length() - 1]
        frontier = nxt & ~seen & ~banned
        seen |= frontier
    return bool(seen >> t & 1)


def find_disjoint_pair(g: Graph, s1: int, t1: int, s2: int, t2: int,
                       ) -> Optional[PathSystem]:
    """First disjoint pair (s1->t1 shortest-lex, then s2->t2 shortest-lex)."""
    others = mask_of((s2, t2))
    for p in _all_paths_lex(g, s1, t1, banned=others):
        pmask = mask_of(p)
        if _reaches(g, s2, t2, banned=pmask):
            q = next(_all_paths_lex(g, s2, t2, banned=pmask))
            return PathSystem([p, q])
    return None


def solve_two_linkage(inst: LinkageInstance) -> LinkageResult:
    """The dichotomy: disjoint paths preferred, else the disc witness.

    Requires the coverage hypothesis; raises HypothesisError otherwise.
    """
    ok, violation = hypothesis_holds(inst)
    if not ok:
        raise HypothesisError(*violation)
    g = inst.host
    ps = find_disjoint_pair(g, inst.s1, inst.t1, inst.s2, inst.t2)
    if ps is not None:
        return LinkageResult(paths=ps)
    planar, emb = is_disc_planar(
        g, [inst.s1, inst.s2, inst.t1, inst.t2], fixed_cyclic_order=True)
    if not planar:  # pragma: no cover - would contradict the dichotomy
        raise GraphError(
            f"dichotomy violated on {g.edges()} with terminals {inst.terminals()}")
    return LinkageResult(witness=emb)
