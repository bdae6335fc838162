"""Small-graph corpora: exhaustive atlases up to isomorphism and seeded samplers."""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Optional

from .graphs import Graph, canonical_form, canonical_graph, is_k_connected, mask_of

_ATLAS: dict[int, list[Graph]] = {0: [Graph(0)]}


def all_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices, one per isomorphism class, canonical labels.

    Built by extending the (n-1)-atlas with one new vertex per neighbourhood
    subset and deduplicating by canonical form.  Results are cached.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n in _ATLAS:
        return _ATLAS[n]
    prev = all_graphs(n - 1)
    seen: dict[str, Graph] = {}
    for g in prev:
        base = g.edges()
        for submask in range(1 << (n - 1)):
            edges = base + [(v, n - 1) for v in range(n - 1) if submask >> v & 1]
            cand = Graph(n, edges)
            key = canonical_form(cand)
            if key not in seen:
                cg, _ = canonical_graph(cand)
                seen[key] = cg
    atlas = [seen[k] for k in sorted(seen)]
    _ATLAS[n] = atlas
    return atlas


def all_graphs_upto(n: int, min_order: int = 0) -> Iterator[Graph]:
    for k in range(min_order, n + 1):
        yield from all_graphs(k)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in itertools.combinations(range(n), 2)
                     if rng.random() < p])


def random_graphs(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(n, p, rng)


def four_connected_atlas(max_order: int) -> list[Graph]:
    """Every 4-connected graph of order <= max_order, up to isomorphism."""
    out = []
    for k in range(5, max_order + 1):
        out.extend(g for g in all_graphs(k) if is_k_connected(g, 4))
    return out


def _octahedron() -> Graph:
    return Graph(6, [e for e in itertools.combinations(range(6), 2)
                     if e not in [(0, 1), (2, 3), (4, 5)]])


def _seed_family(n: int) -> list[Graph]:
    """Structured 4-connected graphs of order n that carry 4-separations
    with a fat planar side: double wheels, stacked antiprisms, padded joins."""
    out = []
    # double wheel: cycle 0..n-3 plus two hubs adjacent to the whole cycle
    c = n - 2
    if c >= 4:
        edges = [(i, (i + 1) % c) for i in range(c)]
        edges += [(i, n - 2) for i in range(c)] + [(i, n - 1) for i in range(c)]
        out.append(Graph(n, edges))
        out.append(Graph(n, edges + [(n - 2, n - 1)]))
    # antiprism on n vertices (n even): two n/2-cycles plus a zigzag
    if n % 2 == 0 and n >= 8:
        h = n // 2
        edges = [(i, (i + 1) % h) for i in range(h)]
        edges += [(h + i, h + (i + 1) % h) for i in range(h)]
        edges += [(i, h + i) for i in range(h)] + [(i, h + (i + 1) % h) for i in range(h)]
        out.append(Graph(n, edges))
    return [g for g in out if is_k_connected(g, 4)]


def sample_4connected(n: int, count: int, seed: int) -> list[Graph]:
    """Deterministic sample of 4-connected order-n graphs (seeded rejection
    over G(n,p) plus a structured family), deduplicated by canonical form."""
    rng = random.Random(seed)
    seen: dict[str, Graph] = {}
    for g in _seed_family(n):
        seen.setdefault(canonical_form(g), g)
    tries = 0
    while len(seen) < count and tries < count * 200:
        tries += 1
        g = random_graph(n, rng.uniform(0.45, 0.8), rng)
        if min((g.degree(v) for v in range(g.n)), default=0) < 4:
            continue
        if is_k_connected(g, 4):
            seen.setdefault(canonical_form(g), g)
    return [seen[k] for k in sorted(seen)]
