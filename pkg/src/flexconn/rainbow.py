"""Pseudo-edges and the Maximum Rainbow Connection solver.

A pseudo-edge joins two decomposition vertices and stands for a minimum
bundle of real edges through an outside vertex (colour ("v", u) for a
singleton u) or through a matched pair (colour ("p", u, v)).  Choosing one
pseudo-edge per colour while minimizing connected components is solved
exactly by matroid intersection of the graphic matroid with the partition
matroid over colour classes, then a local-swap pass minimizes the number of
isolated vertices without touching the component count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import InputError, require
from .graph import UnionFind

Colour = Tuple  # ("v", u) or ("p", u, v) with u < v


@dataclass(frozen=True, order=True)
class PseudoEdge:
    a: int
    b: int
    colour: Colour

    def __post_init__(self):
        if self.a >= self.b:
            raise InputError("pseudo-edge endpoints must satisfy a < b")


@dataclass(frozen=True)
class PseudoEdgeSet:
    edges: Tuple[PseudoEdge, ...]

    def __post_init__(self):
        require(len(set(self.edges)) == len(self.edges), "duplicate pseudo-edges")

    def colours(self) -> List[Colour]:
        return sorted({p.colour for p in self.edges})

    def by_colour(self) -> Dict[Colour, List[PseudoEdge]]:
        out: Dict[Colour, List[PseudoEdge]] = {}
        for p in sorted(self.edges):
            out.setdefault(p.colour, []).append(p)
        return out


@dataclass(frozen=True)
class RainbowSolution:
    chosen: Tuple[PseudoEdge, ...]
    alpha: int
    alpha_large: int
    singletons: FrozenSet[int]

    def components(self, vd: Iterable[int]) -> List[Set[int]]:
        from .graph import connected_components
        return connected_components(vd, [(p, p.a, p.b) for p in self.chosen])


def _component_count(vd: Sequence[int], chosen: Iterable[PseudoEdge]) -> int:
    uf = UnionFind(vd)
    for p in chosen:
        uf.union(p.a, p.b)
    return uf.component_count()


def _singletons(vd: Sequence[int], chosen: Iterable[PseudoEdge]) -> Set[int]:
    touched = set()
    for p in chosen:
        touched.add(p.a)
        touched.add(p.b)
    return set(vd) - touched


def max_rainbow_forest(pe: PseudoEdgeSet, vd: Sequence[int]) -> List[PseudoEdge]:
    """Maximum forest using each colour at most once (graphic x partition
    matroid intersection, augmenting along shortest exchange paths)."""
    ground = sorted(pe.edges)
    in_set: List[bool] = [False] * len(ground)

    def forest_adj(members: List[int]) -> Dict[int, List[Tuple[int, int]]]:
        adj: Dict[int, List[Tuple[int, int]]] = {}
        for i in members:
            p = ground[i]
            adj.setdefault(p.a, []).append((p.b, i))
            adj.setdefault(p.b, []).append((p.a, i))
        return adj

    def forest_path(adj, src: int, dst: int) -> Optional[List[int]]:
        """Ground indices along the forest path src..dst, None if separated."""
        if src == dst:
            return []
        if src not in adj:
            return None
        parent: Dict[int, Tuple[int, int]] = {src: (-1, -1)}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if x == dst:
                break
            for y, i in adj.get(x, ()):
                if y not in parent:
                    parent[y] = (x, i)
                    queue.append(y)
        if dst not in parent:
            return None
        out = []
        x = dst
        while x != src:
            px, i = parent[x]
            out.append(i)
            x = px
        return out

    while True:
        members = [i for i, flag in enumerate(in_set) if flag]
        colour_of_member: Dict[Colour, int] = {ground[i].colour: i for i in members}
        adj = forest_adj(members)
        sources: List[int] = []
        path_through: Dict[int, List[int]] = {}
        for i, p in enumerate(ground):
            if in_set[i]:
                continue
            fp = forest_path(adj, p.a, p.b)
            if fp is None:
                sources.append(i)
            else:
                path_through[i] = fp
        sinks = {i for i, p in enumerate(ground)
                 if not in_set[i] and p.colour not in colour_of_member}

        quick = sorted(set(sources) & sinks)
        if quick:
            in_set[quick[0]] = True
            continue

        # arcs y->z for y in I, z outside with I-y+z acyclic
        out_of_member: Dict[int, List[int]] = {i: [] for i in members}
        for z, fp in path_through.items():
            for y in fp:
                out_of_member[y].append(z)
        for y in out_of_member:
            out_of_member[y].sort()

        parent_arc: Dict[int, int] = {}
        queue = deque()
        for z in sorted(sources):
            parent_arc[z] = -1
            queue.append(z)
        reached_sink = None
        while queue and reached_sink is None:
            x = queue.popleft()
            if not in_set[x]:
                if x in sinks:
                    reached_sink = x
                    break
                # M2 exchange: the unique member sharing x's colour
                y = colour_of_member.get(ground[x].colour)
                if y is not None and y not in parent_arc:
                    parent_arc[y] = x
                    queue.append(y)
            else:
                for z in out_of_member[x]:
                    if z not in parent_arc:
                        parent_arc[z] = x
                        queue.append(z)
        if reached_sink is None:
            return [ground[i] for i in members]
        x = reached_sink
        while x != -1:
            in_set[x] = not in_set[x]
            x = parent_arc[x]


def solve_rainbow(pe: PseudoEdgeSet, vd: Sequence[int]) -> RainbowSolution:
    """One pseudo-edge per colour with the minimum number of components of
    (vd, chosen); no single same-colour replacement lowers the number of
    isolated vertices."""
    if not pe.edges:
        raise InputError("solve_rainbow: empty pseudo-edge set")
    vd = sorted(vd)
    for p in pe.edges:
        if p.a not in set(vd) or p.b not in set(vd):
            raise InputError("pseudo-edge endpoint outside decomposition")
    by_colour = pe.by_colour()
    forest = max_rainbow_forest(pe, vd)
    alpha = len(vd) - len(forest)
    require(_component_count(vd, forest) == alpha, "rainbow forest not acyclic")

    chosen: Dict[Colour, PseudoEdge] = {p.colour: p for p in forest}
    for colour, cands in by_colour.items():
        if colour not in chosen:
            chosen[colour] = cands[0]
    picks = sorted(chosen.values())
    require(_component_count(vd, picks) == alpha,
            "filling unused colours must not change the component count")

    picks = _minimize_singletons(vd, picks, by_colour, alpha)
    singles = frozenset(_singletons(vd, picks))
    alpha_large = alpha - len(singles)
    return RainbowSolution(chosen=tuple(picks), alpha=alpha,
                           alpha_large=alpha_large, singletons=singles)


def _minimize_singletons(vd, picks: List[PseudoEdge], by_colour, alpha: int) -> List[PseudoEdge]:
    current = list(picks)
    best = len(_singletons(vd, current))
    improved = True
    while improved:
        improved = False
        for p in sorted(current):
            for cand in by_colour[p.colour]:
                if cand == p:
                    continue
                trial = [cand if q == p else q for q in current]
                if len(_singletons(vd, trial)) < best:
                    require(_component_count(vd, trial) == alpha,
                            "singleton swap changed the component count")
                    current = trial
                    best = len(_singletons(vd, current))
                    improved = True
                    break
            if improved:
                break
    return sorted(current)


def brute_force_rainbow_components(pe: PseudoEdgeSet, vd: Sequence[int]) -> int:
    """Exhaustive one-edge-per-colour minimum of the component count; the
    independent oracle for rainbow optimality (use only for few colours)."""
    import itertools
    by_colour = pe.by_colour()
    best = None
    for combo in itertools.product(*by_colour.values()):
        c = _component_count(sorted(vd), combo)
        if best is None or c < best:
            best = c
    return best
