"""Open ear decompositions in which every ear (and the initial cycle) has
length at least four.

Construction: start from the shortest cycle of length >= 4, then repeatedly
attach a potential open ear of length >= 4 until none exists.  All choices
are made lowest-index-first so runs are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import InputError, require
from .graph import LabeledGraph, cut_vertices, is_connected


@dataclass(frozen=True)
class EarDecomposition:
    """First ear is a cycle (closing edge implied); later ears are open paths
    whose two endpoints, and only those, lie in the union of earlier ears."""
    ears: Tuple[Tuple[int, ...], ...]

    @property
    def vertices(self) -> Set[int]:
        out: Set[int] = set()
        for ear in self.ears:
            out.update(ear)
        return out

    def edge_pairs(self) -> List[Tuple[int, int]]:
        pairs = []
        cycle = self.ears[0]
        for i in range(len(cycle)):
            a, b = cycle[i], cycle[(i + 1) % len(cycle)]
            pairs.append((min(a, b), max(a, b)))
        for ear in self.ears[1:]:
            for a, b in zip(ear, ear[1:]):
                pairs.append((min(a, b), max(a, b)))
        return pairs

    def edge_ids(self, g: LabeledGraph) -> Set[int]:
        out = set()
        for a, b in self.edge_pairs():
            e = g.edge_between(a, b)
            require(e is not None, f"ear edge {a}-{b} missing from graph")
            out.add(e.eid)
        return out

    @property
    def edge_count(self) -> int:
        return len(self.ears[0]) + sum(len(ear) - 1 for ear in self.ears[1:])


def _is_2vc(g: LabeledGraph) -> bool:
    if g.n < 3:
        return False
    if not is_connected(range(g.n), [(e.eid, e.u, e.v) for e in g.edges]):
        return False
    return not cut_vertices(g)


def shortest_long_cycle(g: LabeledGraph) -> Tuple[int, ...]:
    """Shortest cycle of length >= 4, lexicographically smallest vertex
    sequence among those of minimum length."""
    best_len = None
    for mid in range(g.n):
        nbrs = g.neighbors(mid)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                d = _dist_avoiding(g, a, b, forbidden={mid}, skip_edge=(a, b))
                if d is None:
                    continue
                length = d + 2
                if length >= 4 and (best_len is None or length < best_len):
                    best_len = length
    if best_len is None:
        raise InputError("no cycle of length >= 4 exists")
    seq = _lex_smallest_cycle(g, best_len)
    require(seq is not None, "cycle search inconsistency")
    return seq


def _dist_avoiding(g: LabeledGraph, a: int, b: int,
                   forbidden: Set[int], skip_edge: Tuple[int, int]) -> Optional[int]:
    skip = frozenset(skip_edge)
    dist = {a: 0}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            return dist[x]
        for y in g.neighbors(x):
            if y in forbidden or y in dist:
                continue
            if frozenset((x, y)) == skip:
                continue
            dist[y] = dist[x] + 1
            queue.append(y)
    return None


def _lex_smallest_cycle(g: LabeledGraph, length: int) -> Optional[Tuple[int, ...]]:
    """First cycle sequence of exactly `length` distinct vertices in
    lexicographic DFS order (so the global lexicographic minimum)."""
    path: List[int] = []
    on_path: Set[int] = set()

    def rec(v: int, dist_home: Dict[int, int]) -> Optional[Tuple[int, ...]]:
        path.append(v)
        on_path.add(v)
        if len(path) == length:
            hit = tuple(path) if path[0] in g.neighbor_sets[v] else None
            path.pop()
            on_path.discard(v)
            return hit
        remaining = length - len(path)
        for w in g.neighbors(v):
            if w in on_path or dist_home.get(w, length + 1) > remaining:
                continue
            hit = rec(w, dist_home)
            if hit is not None:
                return hit
        path.pop()
        on_path.discard(v)
        return None

    for start in range(g.n):
        dist_home = {start: 0}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in dist_home:
                    dist_home[y] = dist_home[x] + 1
                    queue.append(y)
        hit = rec(start, dist_home)
        if hit is not None:
            return hit
    return None


def find_potential_open_ear_ge4(g: LabeledGraph, dec: EarDecomposition) -> Optional[Tuple[int, ...]]:
    """One potential open ear of length >= 4 for the decomposition, if any.

    Scans tuples (x, y1, y2, y3) with x inside the decomposition and the y_i
    outside, in lexicographic order; for the first tuple that starts a valid
    ear, returns x,y1,y2,y3 extended by a shortest path from y3 to the
    decomposition that avoids x (internal vertices stay outside).
    """
    vd = dec.vertices
    for x in sorted(vd):
        for y1 in g.neighbors(x):
            if y1 in vd:
                continue
            for y2 in g.neighbors(y1):
                if y2 in vd or y2 == x:
                    continue
                for y3 in g.neighbors(y2):
                    if y3 in vd or y3 in (x, y1):
                        continue
                    tail = _path_to_set(g, y3, targets=vd - {x},
                                        blocked={x, y1, y2}, outside=vd)
                    if tail is not None:
                        return (x, y1, y2) + tuple(tail)
    return None


def _path_to_set(g: LabeledGraph, start: int, targets: Set[int],
                 blocked: Set[int], outside: Set[int]) -> Optional[List[int]]:
    """Shortest path start..t with t in targets, internal vertices outside the
    decomposition and not blocked.  BFS with sorted adjacency, so the result
    is the lexicographically smallest shortest path."""
    parent: Dict[int, Optional[int]] = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y in blocked or y in parent:
                continue
            parent[y] = x
            if y in targets:
                path = [y]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                return list(reversed(path))
            if y not in outside:
                queue.append(y)
    return None


def build_long_ear_decomposition(g: LabeledGraph) -> EarDecomposition:
    """Ear decomposition with all ears of length >= 4 for a simple 2VC graph
    on at least four vertices."""
    if g.n < 4:
        raise InputError("need at least 4 vertices")
    if not g.is_simple:
        raise InputError("graph must be simple")
    if not _is_2vc(g):
        raise InputError("graph must be 2-vertex-connected")
    dec = EarDecomposition(ears=(shortest_long_cycle(g),))
    while True:
        ear = find_potential_open_ear_ge4(g, dec)
        if ear is None:
            break
        _validate_open_ear(g, dec, ear)
        dec = EarDecomposition(ears=dec.ears + (ear,))
    _assert_invariants(g, dec)
    return dec


def _validate_open_ear(g: LabeledGraph, dec: EarDecomposition, ear: Sequence[int]) -> None:
    vd = dec.vertices
    require(len(ear) >= 5, "ear shorter than 4 edges")
    require(ear[0] in vd and ear[-1] in vd and ear[0] != ear[-1],
            "ear endpoints must be two distinct decomposition vertices")
    internals = ear[1:-1]
    require(all(v not in vd for v in internals), "ear interior must be fresh")
    require(len(set(ear)) == len(ear), "ear repeats a vertex")
    for a, b in zip(ear, ear[1:]):
        require(g.edge_between(a, b) is not None, "ear uses a non-edge")


def _assert_invariants(g: LabeledGraph, dec: EarDecomposition) -> None:
    vd = dec.vertices
    require(3 * dec.edge_count <= 4 * (len(vd) - 1),
            "|E(D)| <= 4/3 (|V(D)|-1) failed")
    if not has_forbidden_cycle(g):
        require(leftover_is_matching(g, vd),
                "leftover edges outside the decomposition must form a matching")


def leftover_is_matching(g: LabeledGraph, vd: Set[int]) -> bool:
    deg: Dict[int, int] = {}
    for e in g.edges:
        if e.u not in vd and e.v not in vd:
            deg[e.u] = deg.get(e.u, 0) + 1
            deg[e.v] = deg.get(e.v, 0) + 1
    return all(d <= 1 for d in deg.values())


def has_forbidden_cycle(g: LabeledGraph) -> bool:
    return find_forbidden_cycle(g) is not None


def find_forbidden_cycle(g: LabeledGraph) -> Optional[Tuple[int, int, int, int]]:
    """Lowest (w, z, u, v) with deg(w)=deg(z)=2, wz not an edge, and
    N(w) = N(z) = {u, v}: the 4-cycle u-w-v-z, returned as (u, w, v, z)."""
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    for i, w in enumerate(deg2):
        for z in deg2[i + 1:]:
            if z in g.neighbor_sets[w]:
                continue
            if g.neighbor_sets[w] == g.neighbor_sets[z]:
                u, v = sorted(g.neighbor_sets[w])
                return (u, w, v, z)
    return None
