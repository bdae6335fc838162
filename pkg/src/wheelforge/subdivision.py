"""K5-subdivision certificates: verification, search, wheel-based assembly."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import (CheckResult, Graph, GraphError, PathSystem,
                     UnsupportedSizeError)
from .wheels import Wheel


PAIRS = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3),
         (2, 4), (3, 4)]


@dataclass(frozen=True)
class SubdivisionCertificate:
    """Five branch vertices and ten internally disjoint connecting paths."""

    branch: tuple[int, int, int, int, int]
    paths: dict[tuple[int, int], tuple[int, ...]]

    def to_json(self) -> dict:
        return {"branch": list(self.branch),
                "paths": {f"{i}-{j}": list(self.paths[(i, j)])
                          for i, j in PAIRS}}

    @classmethod
    def from_json(cls, obj: dict) -> "SubdivisionCertificate":
        branch = tuple(int(v) for v in obj["branch"])
        paths = {}
        for key, seq in obj["paths"].items():
            i, j = key.split("-")
            paths[(int(i), int(j))] = tuple(int(v) for v in seq)
        return cls(branch, paths)


def verify_k5_certificate(g: Graph, cert: SubdivisionCertificate) -> CheckResult:
    """Definitional check; reports the first violation found."""
    b = cert.branch
    if len(b) != 5 or len(set(b)) != 5:
        return CheckResult(False, "need 5 distinct branch vertices")
    for v in b:
        if not (0 <= v < g.n):
            return CheckResult(False, f"branch vertex {v} out of range")
    if set(cert.paths.keys()) != set(PAIRS):
        return CheckResult(False, "paths must be indexed by the 10 branch pairs")
    internal: dict[int, tuple[int, int]] = {}
    for (i, j) in PAIRS:
        p = cert.paths[(i, j)]
        if len(p) < 2 or p[0] != b[i] or p[-1] != b[j]:
            return CheckResult(False, f"path {i}-{j} does not join its branch vertices")
        if len(set(p)) != len(p):
            return CheckResult(False, f"path {i}-{j} repeats a vertex")
        for x, y in zip(p, p[1:]):
            if not g.has_edge(x, y):
                return CheckResult(False, f"path {i}-{j} uses non-edge ({x},{y})")
        for v in p[1:-1]:
            if v in b:
                return CheckResult(False, f"path {i}-{j} passes through branch vertex {v}")
            if v in internal:
                return CheckResult(False,
                                   f"vertex {v} is internal to paths {internal[v]} and {(i, j)}")
            internal[v] = (i, j)
    return CheckResult(True)


def find_k5_subdivision(g: Graph, naive: bool = False,
                        ) -> Optional[SubdivisionCertificate]:
    """Search for a K5-subdivision by branch-vertex choice plus backtracking
    path routing.  `naive` disables the degree pre-filter and the
    highest-degree-first ordering (the oracle mode used in tests)."""
    if g.n > 12:
        raise UnsupportedSizeError(f"subdivision search supports order <= 12, got {g.n}")
    if naive:
        candidates = list(range(g.n))
    else:
        candidates = [v for v in range(g.n) if g.degree(v) >= 4]
        if len(candidates) < 5:
            return None
        candidates.sort(key=lambda v: -g.degree(v))
    for combo in itertools.combinations(candidates, 5):
        if not naive and any(g.degree(v) < 4 for v in combo):
            continue
        cert = _route_all_pairs(g, tuple(sorted(combo)))
        if cert is not None:
            return cert
    return None


def _route_all_pairs(g: Graph, branch: tuple[int, ...],
                     ) -> Optional[SubdivisionCertificate]:
    bset = set(branch)
    used: set[int] = set()
    paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def route(k: int) -> bool:
        if k == len(PAIRS):
            return True
        i, j = PAIRS[k]
        s, t = branch[i], branch[j]

        def dfs(path: list[int], visited: set[int]) -> bool:
            cur = path[-1]
            for nxt in g.nbr[cur]:
                if nxt == t:
                    paths[(i, j)] = tuple(path + [t])
                    used.update(path[1:])
                    if route(k + 1):
                        return True
                    used.difference_update(path[1:])
                    del paths[(i, j)]
                elif nxt not in bset and nxt not in used and nxt not in visited:
                    path.append(nxt)
                    visited.add(nxt)
                    if dfs(path, visited):
                        return True
                    path.pop()
                    visited.remove(nxt)
            return False

        return dfs([s], {s})

    if route(0):
        cert = SubdivisionCertificate(tuple(branch), dict(paths))
        return cert
    return None


class AssemblyError(GraphError):
    """Wheel/extension/link pieces clash; the message names the collision."""


def assemble_k5(wheel: Wheel, extension: PathSystem, links: PathSystem,
                ) -> SubdivisionCertificate:
    """Build a K5-subdivision from a wheel, four extension paths and two
    crossing link paths, then verify it before returning.

    Branch vertices are the wheel center and the extension paths' spoke
    neighbours; rim arcs between consecutive used spokes become branch paths
    (absorbing unused spoke vertices as internals), and each remaining pair
    is a P_i + link + P_j concatenation.
    """
    g = wheel.embedding.host
    w = wheel.center
    if len(extension.paths) != 4:
        raise AssemblyError(f"need 4 extension paths, got {len(extension.paths)}")
    for p in extension.paths:
        if p[0] != w:
            raise AssemblyError(f"extension path {p} does not start at the center")
    if len(links.paths) != 2:
        raise AssemblyError(f"need 2 link paths, got {len(links.paths)}")

    spoke_of = {p[-1]: p[1] for p in extension.paths}
    path_of = {p[-1]: p for p in extension.paths}
    if len(spoke_of) != 4:
        raise AssemblyError("extension paths share an endpoint")

    # rim positions of the used spokes, in rim (clockwise) order
    rim = wheel.rim
    used_spokes = [v for v in rim if v in set(spoke_of.values())]
    if len(used_spokes) != 4:
        raise AssemblyError("extension paths must leave through 4 distinct spokes")

    branch = tuple(sorted([w] + used_spokes))
    bidx = {v: i for i, v in enumerate(branch)}

    cert_paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def put(seq: Sequence[int]) -> None:
        a, b = seq[0], seq[-1]
        i, j = bidx[a], bidx[b]
        if i > j:
            i, j = j, i
            seq = tuple(reversed(seq))
        if (i, j) in cert_paths:
            raise AssemblyError(
                f"branch pair {branch[i]},{branch[j]} connected twice")
        cert_paths[(i, j)] = tuple(seq)

    # spokes from the center
    for v in used_spokes:
        put((w, v))
    # rim arcs between consecutive used spokes
    pos = [rim.index(v) for v in used_spokes]
    for a in range(4):
        i, j = pos[a], pos[(a + 1) % 4]
        arc = [rim[i]]
        k = i
        while k != j:
            k = (k + 1) % len(rim)
            arc.append(rim[k])
        put(arc)
    # links close the two crossing pairs through the extension paths
    ext_vertices = {v for p in extension.paths for v in p[1:]}
    for q in links.paths:
        t_a, t_b = q[0], q[-1]
        if t_a not in path_of or t_b not in path_of:
            raise AssemblyError(f"link {q} does not join extension endpoints")
        clash = (set(q) - {t_a, t_b}) & (wheel.vertices()
                                         | (ext_vertices - {t_a, t_b}))
        if clash:
            raise AssemblyError(f"link through {sorted(clash)} clashes with the wheel side")
        pa, pb = path_of[t_a], path_of[t_b]
        seq = tuple(pa[1:]) + tuple(q[1:]) + tuple(reversed(pb[1:]))[1:]
        put(seq)

    cert = SubdivisionCertificate(branch, cert_paths)
    check = verify_k5_certificate(g, cert)
    if not check:
        raise AssemblyError(f"assembled certificate invalid: {check.detail}")
    return cert
