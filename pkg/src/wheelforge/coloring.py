"""Exact 4-coloring, verification, and greedy extension of partial colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import CheckResult, Graph, GraphError, UnsupportedSizeError

COLORS = 4


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color in {0..3}; None marks uncolored vertices."""

    colors: tuple[Optional[int], ...]

    def __init__(self, colors: Sequence[Optional[int]]):
        object.__setattr__(self, "colors", tuple(colors))

    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)

    def to_json(self) -> dict:
        return {"colors": list(self.colors)}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        return cls([None if c is None else int(c) for c in obj["colors"]])


def verify_coloring(g: Graph, c: Coloring) -> CheckResult:
    """Proper and total; first conflicting edge or uncolored vertex named."""
    if len(c.colors) != g.n:
        return CheckResult(False, "coloring length differs from order")
    for v, col in enumerate(c.colors):
        if col is None:
            return CheckResult(False, f"vertex {v} uncolored")
        if not (0 <= col < COLORS):
            return CheckResult(False, f"vertex {v} has color {col} outside 0..3")
    for u, v in g.edges():
        if c.colors[u] == c.colors[v]:
            return CheckResult(False, f"edge ({u},{v}) is monochromatic")
    return CheckResult(True)


def four_color(g: Graph) -> Optional[Coloring]:
    """Proper 4-coloring or a definitive None, by saturation-first backtracking."""
    if g.n > 20:
        raise UnsupportedSizeError(f"four_color supports order <= 20, got {g.n}")
    colors: list[Optional[int]] = [None] * g.n
    nbr_colors = [0] * g.n  # bitmask of colors present in the neighbourhood

    order_hint = sorted(range(g.n), key=lambda v: -g.degree(v))

    def pick() -> Optional[int]:
        best, key = None, None
        for v in order_hint:
            if colors[v] is not None:
                continue
            sat = nbr_colors[v].bit_count()
            k = (-sat, -g.degree(v), v)
            if best is None or k < key:
                best, key = v, k
        return best

    def rec() -> bool:
        v = pick()
        if v is None:
            return True
        avail = (~nbr_colors[v]) & ((1 << COLORS) - 1)
        while avail:
            bit = avail & -avail
            avail ^= bit
            col = bit.bit_length() - 1
            colors[v] = col
            saved = []
            for u in g.nbr[v]:
                saved.append(nbr_colors[u])
                nbr_colors[u] |= bit
            if rec():
                return True
            for u, old in zip(g.nbr[v], saved):
                nbr_colors[u] = old
            colors[v] = None
        return False

    if rec():
        return Coloring(colors)
    return None


@dataclass(frozen=True)
class ExtendResult:
    """Either a completed coloring or the vertex with no available color."""

    coloring: Optional[Coloring]
    stuck: Optional[int] = None

    def __bool__(self) -> bool:
        return self.coloring is not None


def greedy_extend(g: Graph, partial: Coloring, order: Sequence[int],
                  ) -> ExtendResult:
    """Color `order` greedily with the least color absent from the colored
    neighbourhood; stops at the first vertex with no color left."""
    if len(partial.colors) != g.n:
        raise GraphError("partial coloring length differs from order")
    uncolored = {v for v in range(g.n) if partial.colors[v] is None}
    if sorted(order) != sorted(uncolored) or len(set(order)) != len(order):
        raise GraphError("order must list exactly the uncolored vertices, once each")
    for v, col in enumerate(partial.colors):
        if col is not None:
            for u in g.nbr[v]:
                if partial.colors[u] == col:
                    raise GraphError(f"partial coloring conflicts on edge ({u},{v})")
    colors = list(partial.colors)
    for v in order:
        used = {colors[u] for u in g.nbr[v] if colors[u] is not None}
        free = next((c for c in range(COLORS) if c not in used), None)
        if free is None:
            return ExtendResult(None, stuck=v)
        colors[v] = free
    return ExtendResult(Coloring(colors))
