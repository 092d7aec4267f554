"""Feasibility predicates for the three problem variants, plus minimal pruning.

FGC: (V,F) connected and no unsafe edge of F is a bridge.
FVC: (V,F) connected and no unsafe vertex is a cut vertex.
k-FGC: (V,F) connected and it survives the simultaneous removal of any k
unsafe edges; equivalently (and this is the polynomial fast path) the
contraction of (V,F) by its safe edges is (k+1)-edge-connected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Iterable, Set

from .errors import InputError, require
from .graph import (LabeledGraph, UnionFind, block_decomposition_edges,
                    edge_connectivity_at_least, is_connected)

PROBLEMS = ("fgc", "fvc", "kfgc")


@dataclass(frozen=True)
class Instance:
    graph: LabeledGraph
    problem: str
    k: int = 1

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise InputError(f"unknown problem {self.problem!r}")
        if self.k < 1:
            raise InputError("k must be a positive integer")
        if self.problem == "fvc" and not self.graph.is_simple:
            raise InputError("FVC instances must be simple graphs")


@dataclass(frozen=True)
class Solution:
    edge_ids: FrozenSet[int]
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.edge_ids)


def _edge_set(g: LabeledGraph, eids: Iterable[int]) -> Set[int]:
    chosen = set(eids)
    unknown = chosen - set(g.edge_by_id)
    if unknown:
        raise InputError(f"unknown edge ids {sorted(unknown)}")
    return chosen


def check_fgc(g: LabeledGraph, eids: Iterable[int]) -> bool:
    chosen = _edge_set(g, eids)
    triples = [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in chosen]
    if not is_connected(range(g.n), triples):
        return False
    bridges = _bridge_ids(g.n, triples)
    return all(g.edge_by_id[eid].safe for eid in bridges)


def _bridge_ids(n: int, triples) -> Set[int]:
    # a bridge is a block consisting of a single edge
    bl, _ = block_decomposition_edges(range(n), triples)
    return {comp[0] for comp in bl if len(comp) == 1}


def check_fvc(g: LabeledGraph, eids: Iterable[int]) -> bool:
    chosen = _edge_set(g, eids)
    triples = [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in chosen]
    if not is_connected(range(g.n), triples):
        return False
    _, cut = block_decomposition_edges(range(g.n), triples)
    return all(g.vertex_safe[v] for v in cut)


def check_kfgc(g: LabeledGraph, eids: Iterable[int], k: int) -> bool:
    if k < 1:
        raise InputError("k must be a positive integer")
    chosen = _edge_set(g, eids)
    triples = [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in chosen]
    if not is_connected(range(g.n), triples):
        return False
    fast = _kfgc_fast_path(g, chosen, k)
    unsafe_chosen = [eid for eid in chosen if not g.edge_by_id[eid].safe]
    if k <= 2 and len(unsafe_chosen) <= 12:
        literal = _kfgc_literal(g, chosen, unsafe_chosen, k)
        require(fast == literal,
                "k-FGC fast path disagrees with literal enumeration")
    return fast


def _kfgc_fast_path(g: LabeledGraph, chosen: Set[int], k: int) -> bool:
    """Contract chosen safe edges, then ask for (k+1)-edge-connectivity."""
    uf = UnionFind(range(g.n))
    for eid in chosen:
        e = g.edge_by_id[eid]
        if e.safe:
            uf.union(e.u, e.v)
    comp = {v: uf.find(v) for v in range(g.n)}
    verts = sorted(set(comp.values()))
    contracted = []
    for eid in chosen:
        e = g.edge_by_id[eid]
        if not e.safe and comp[e.u] != comp[e.v]:
            contracted.append((eid, comp[e.u], comp[e.v]))
    return edge_connectivity_at_least(verts, contracted, k + 1)


def _kfgc_literal(g: LabeledGraph, chosen: Set[int], unsafe_chosen, k: int) -> bool:
    for removed in itertools.combinations(sorted(unsafe_chosen), min(k, len(unsafe_chosen))):
        keep = chosen - set(removed)
        triples = [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in keep]
        if not is_connected(range(g.n), triples):
            return False
    return True


def checker_for(instance: Instance) -> Callable[[LabeledGraph, Iterable[int]], bool]:
    if instance.problem == "fgc":
        return check_fgc
    if instance.problem == "fvc":
        return check_fvc
    k = instance.k
    return lambda g, eids: check_kfgc(g, eids, k)


def prune_minimal(g: LabeledGraph, eids: Iterable[int], checker) -> FrozenSet[int]:
    """Drop edges in ascending id order while the checker stays satisfied.

    Feasibility for all three problems is monotone under adding edges, so a
    single ascending pass yields an inclusion-minimal set and re-pruning is a
    no-op.
    """
    current = _edge_set(g, eids)
    if not checker(g, current):
        raise InputError("prune_minimal: starting edge set is infeasible")
    for eid in sorted(current):
        trial = current - {eid}
        if checker(g, trial):
            current = trial
    return frozenset(current)
