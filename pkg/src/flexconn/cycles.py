"""Good cycles with respect to a vertex partition.

A good cycle of a partition is an edge set that contracts to a simple cycle
of length >= 2, attaches to every large part at distinct vertices, touches
at least one large part, and is only allowed to have length two between two
large parts.  ``find_good_cycle`` builds one by merging the partition into a
coarser one, searching a "nice" cycle there (entry and exit vertices of each
large part must differ), and patching the result back; every returned cycle
is re-validated by the independent checker below.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import require
from .graph import LabeledGraph, UnionFind


@dataclass(frozen=True)
class _Part:
    vertices: FrozenSet[int]
    kind: str                          # "F0" | "F1" | "F2" | "A0"
    large_sub: Optional[FrozenSet[int]] = None   # for F2: the large part inside


def is_good_cycle(parts: Sequence[FrozenSet[int]],
                  cycle_edges: Sequence[Tuple[int, int, int]]) -> bool:
    """Independent validator for the four good-cycle conditions.

    ``cycle_edges`` are (eid, u, v) triples.  Checks, from scratch: the edges
    contract (one vertex per part) to a single simple cycle of length >= 2;
    edges meet each large part at pairwise distinct vertices; at least one
    edge touches a large part; a length-2 cycle joins two large parts.
    """
    if len(cycle_edges) < 2:
        return False
    part_of: Dict[int, int] = {}
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    degree: Dict[int, int] = {}
    attach: Dict[int, List[int]] = {}
    uf = UnionFind(range(len(parts)))
    seen_eids = set()
    for eid, u, v in cycle_edges:
        if eid in seen_eids:
            return False
        seen_eids.add(eid)
        pu, pv = part_of.get(u), part_of.get(v)
        if pu is None or pv is None or pu == pv:
            return False
        degree[pu] = degree.get(pu, 0) + 1
        degree[pv] = degree.get(pv, 0) + 1
        attach.setdefault(pu, []).append(u)
        attach.setdefault(pv, []).append(v)
        uf.union(pu, pv)
    touched = sorted(degree)
    if any(degree[p] != 2 for p in touched):
        return False
    if len({uf.find(p) for p in touched}) != 1:
        return False
    if len(cycle_edges) != len(touched):
        return False
    for p in touched:
        if len(parts[p]) >= 2 and attach[p][0] == attach[p][1]:
            return False
    if not any(len(parts[p]) >= 2 for p in touched):
        return False
    if len(cycle_edges) == 2 and sum(1 for p in touched if len(parts[p]) >= 2) != 2:
        return False
    return True


def find_good_cycle(g: LabeledGraph, vd: Set[int],
                    parts: Sequence[FrozenSet[int]]) -> Optional[Set[int]]:
    """A good cycle of `parts` using edges of g induced on vd, or None.

    None is returned exactly when no good cycle can exist: no large part, or
    a single large part with no two adjacent singletons.
    """
    parts = sorted((frozenset(p) for p in parts), key=min)
    larges = [p for p in parts if len(p) >= 2]
    singles = [min(p) for p in parts if len(p) == 1]
    single_set = set(singles)
    if not larges:
        return None
    nbr = {v: sorted(w for w in g.neighbor_sets[v] if w in vd) for v in vd}
    if len(larges) == 1:
        if not any(w in single_set for v in singles for w in nbr[v]):
            return None

    coarse = _coarsen(parts, larges, singles, nbr)
    require(len(coarse) >= 2, "coarsened partition must have >= 2 parts")
    nice = _find_nice_cycle(g, vd, coarse)
    require(nice is not None, "a nice cycle must exist on a 2VC graph")
    cycle_eids = _augment_to_good_cycle(g, coarse, nice)
    triples = [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in sorted(cycle_eids)]
    require(is_good_cycle(parts, triples), "constructed cycle failed validation")
    return set(cycle_eids)


def _coarsen(parts, larges, singles, nbr) -> List[_Part]:
    """Merge adjacent singletons (F1) and absorb, into each large part, the
    singletons holding two distinct edges into it (F2)."""
    single_set = set(singles)
    a1 = {v for v in singles if any(w in single_set for w in nbr[v])}
    f1_groups: List[FrozenSet[int]] = []
    left = set(a1)
    while left:
        seed = min(left)
        comp = {seed}
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            for y in nbr[x]:
                if y in a1 and y not in comp:
                    comp.add(y)
                    queue.append(y)
        f1_groups.append(frozenset(comp))
        left -= comp

    a2 = set()
    for v in singles:
        if v in a1:
            continue
        if any(len(set(nbr[v]) & L) >= 2 for L in larges):
            a2.add(v)
    coarse: List[_Part] = []
    remaining = set(a2)
    absorbed_of: Dict[FrozenSet[int], Set[int]] = {}
    for L in sorted(larges, key=min):
        grabbed = {v for v in remaining if len(set(nbr[v]) & L) >= 2}
        absorbed_of[L] = grabbed
        remaining -= grabbed
    require(not remaining, "every doubly-anchored singleton must be absorbed")
    for L in sorted(larges, key=min):
        grabbed = absorbed_of[L]
        if grabbed:
            coarse.append(_Part(frozenset(L | grabbed), "F2", frozenset(L)))
        else:
            coarse.append(_Part(frozenset(L), "F0", None))
    for grp in f1_groups:
        coarse.append(_Part(grp, "F1", None))
    for v in singles:
        if v not in a1 and v not in a2:
            coarse.append(_Part(frozenset({v}), "A0", None))
    return sorted(coarse, key=lambda p: min(p.vertices))


def _find_nice_cycle(g: LabeledGraph, vd: Set[int], coarse: Sequence[_Part]):
    """Backtracking search for a cycle over coarse parts whose two attachment
    vertices differ inside every non-singleton part.

    Returns (edge ids, attachments per part index) or None.  The search walks
    cross edges lowest-first; a part may carry one internal "transit" from its
    entry vertex to a different exit vertex.
    """
    part_of: Dict[int, int] = {}
    for i, p in enumerate(coarse):
        for v in p.vertices:
            part_of[v] = i
    cross: Dict[int, List[Tuple[int, int, int]]] = {v: [] for v in vd}
    for e in g.edges:
        if e.u in part_of and e.v in part_of and part_of[e.u] != part_of[e.v]:
            cross[e.u].append((e.v, e.eid, part_of[e.v]))
            cross[e.v].append((e.u, e.eid, part_of[e.u]))
    for v in cross:
        cross[v].sort()

    def exits(part_idx: int, entry: Optional[int]):
        p = coarse[part_idx]
        for v in sorted(p.vertices):
            if entry is not None and len(p.vertices) >= 2 and v == entry:
                continue
            if entry is not None and len(p.vertices) == 1 and v != entry:
                continue
            if cross[v]:
                yield v

    for start_idx in range(len(coarse)):
        for a0 in exits(start_idx, None):
            for (c, eid, r) in cross[a0]:
                found = _extend_cycle(coarse, cross, part_of, start_idx, a0,
                                      [(eid, a0, c)], {start_idx, r}, r, c)
                if found is not None:
                    return found
    return None


def _extend_cycle(coarse, cross, part_of, start_idx, start_exit,
                  path_edges, visited, cur_idx, cur_entry):
    for a in _exit_choices(coarse[cur_idx], cur_entry):
        for (c, eid, r) in cross[a]:
            if r == start_idx:
                big_start = len(coarse[start_idx].vertices) >= 2
                if big_start and c == start_exit:
                    continue
                if not big_start and c != start_exit:
                    continue
                if len(path_edges) == 1 and eid == path_edges[0][0]:
                    continue
                edges = path_edges + [(eid, a, c)]
                return [(e, u, v) for e, u, v in edges]
            if r in visited:
                continue
            found = _extend_cycle(coarse, cross, part_of, start_idx, start_exit,
                                  path_edges + [(eid, a, c)], visited | {r}, r, c)
            if found is not None:
                return found
    return None


def _exit_choices(part: _Part, entry: int):
    if len(part.vertices) == 1:
        yield entry
        return
    for v in sorted(part.vertices):
        if v != entry:
            yield v


def _augment_to_good_cycle(g: LabeledGraph, coarse: Sequence[_Part], nice) -> Set[int]:
    part_of: Dict[int, int] = {}
    for i, p in enumerate(coarse):
        for v in p.vertices:
            part_of[v] = i
    out = {eid for eid, _, _ in nice}
    attach: Dict[int, List[int]] = {}
    for eid, u, v in nice:
        attach.setdefault(part_of[u], []).append(u)
        attach.setdefault(part_of[v], []).append(v)
    for idx, pts in attach.items():
        part = coarse[idx]
        if part.kind in ("A0", "F0"):
            continue
        require(len(pts) == 2, "nice cycle must meet each part exactly twice")
        x, y = pts
        if part.kind == "F1":
            require(x != y, "distinct attachments required inside a merged group")
            out |= _path_edge_ids(g, part.vertices, x, y)
        else:  # F2
            L = part.large_sub
            if x in L and y in L:
                continue
            if y in L:
                x, y = y, x
            if x in L:
                w = min(w for w in g.neighbor_sets[y] if w in L and w != x)
                out.add(g.edge_between(y, w).eid)
            else:
                w1 = min(w for w in g.neighbor_sets[x] if w in L)
                w2 = min(w for w in g.neighbor_sets[y] if w in L and w != w1)
                out.add(g.edge_between(x, w1).eid)
                out.add(g.edge_between(y, w2).eid)
    return out


def _path_edge_ids(g: LabeledGraph, inside: FrozenSet[int], x: int, y: int) -> Set[int]:
    parent: Dict[int, Optional[int]] = {x: None}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        if v == y:
            break
        for w in sorted(g.neighbor_sets[v]):
            if w in inside and w not in parent:
                parent[w] = v
                queue.append(w)
    require(y in parent, "merged singleton group must be connected")
    out: Set[int] = set()
    v = y
    while parent[v] is not None:
        out.add(g.edge_between(v, parent[v]).eid)
        v = parent[v]
    return out
