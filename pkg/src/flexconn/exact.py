"""Exact small-instance oracles.

Optimal solutions are found by iterating candidate sizes s = lb, lb+1, ...
and enumerating s-subsets of edges in lexicographic id order with pruning,
so the first hit is both minimum and lexicographically smallest.  The main
prune: whenever an edge is skipped, the remaining "optimistic" graph (chosen
plus all undecided edges) must still be feasible.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, List, Optional, Set

from .errors import InfeasibleInstanceError, InputError
from .feasibility import Instance, Solution, checker_for
from .graph import LabeledGraph, is_connected, is_k_edge_connected

DEFAULT_CAP_N = 10


def _minimum_feasible(g: LabeledGraph,
                      predicate: Callable[[Set[int]], bool],
                      lower_bound: int) -> Optional[Set[int]]:
    eids = sorted(g.edge_by_id)
    m = len(eids)
    if not predicate(set(eids)):
        return None
    lb = max(0, lower_bound)

    def search(s: int) -> Optional[List[int]]:
        chosen: List[int] = []

        def rec(idx: int, available: Set[int]) -> Optional[List[int]]:
            if len(chosen) == s:
                return list(chosen) if predicate(set(chosen)) else None
            if len(chosen) + (m - idx) < s:
                return None
            eid = eids[idx]
            # include first: lexicographically smallest solution wins
            chosen.append(eid)
            hit = rec(idx + 1, available)
            if hit is not None:
                return hit
            chosen.pop()
            available.discard(eid)
            # optimistic graph shrank; prune if it can no longer be feasible
            if predicate(set(chosen) | available):
                hit = rec(idx + 1, available)
                if hit is not None:
                    return hit
            available.add(eid)
            return None

        return rec(0, set(eids))

    for s in range(lb, m + 1):
        hit = search(s)
        if hit is not None:
            return set(hit)
    return None


def _degree_lower_bound(g: LabeledGraph, required: Callable[[int], int]) -> int:
    if g.n == 0:
        return 0
    return math.ceil(sum(required(v) for v in range(g.n)) / 2)


def _fvc_lower_bound(g: LabeledGraph) -> int:
    from .fvc import solve_tree_case  # cycle-free: fvc imports exact lazily
    if g.n <= 1:
        return 0
    if solve_tree_case(g) is not None:
        return g.n - 1
    if g.n == 2:
        return 1

    def req(v: int) -> int:
        # a degree-1 vertex hangs off a cut vertex, which must then be safe
        has_safe_nbr = any(g.vertex_safe[w] for w in g.neighbor_sets[v])
        return 1 if has_safe_nbr else 2

    return max(g.n, _degree_lower_bound(g, req))


def _fgc_lower_bound(g: LabeledGraph) -> int:
    if g.n <= 1:
        return 0

    def req(v: int) -> int:
        return 1 if any(e.safe for e in g.adj[v]) else 2

    return max(g.n - 1, _degree_lower_bound(g, req))


def _kfgc_lower_bound(g: LabeledGraph, k: int) -> int:
    from .kfgc import max_safe_forest
    forest = max_safe_forest(g)
    contracted = g.n - len(forest)
    if contracted <= 1:
        return g.n - 1
    return max(g.n - 1, len(forest) + math.ceil(contracted * (k + 1) / 2))


def exact_solve(inst: Instance, cap_n: int = DEFAULT_CAP_N) -> Solution:
    """Minimum-cardinality feasible edge set, or an error if none exists."""
    g = inst.graph
    if g.n > cap_n:
        raise InputError(f"exact_solve: n={g.n} exceeds cap {cap_n}")
    checker = checker_for(inst)
    if not checker(g, set(g.edge_by_id)):
        raise InfeasibleInstanceError("instance is infeasible even with all edges")
    if inst.problem == "fvc":
        lb = _fvc_lower_bound(g)
    elif inst.problem == "fgc":
        lb = _fgc_lower_bound(g)
    else:
        lb = _kfgc_lower_bound(g, inst.k)
    best = _minimum_feasible(g, lambda s: checker(g, s), lb)
    if best is None:
        raise InfeasibleInstanceError("instance is infeasible")
    return Solution(edge_ids=frozenset(best),
                    meta={"problem": inst.problem, "k": inst.k,
                          "apx_size": len(best), "exact": True})


def exact_2ecss(g: LabeledGraph, cap_n: int = DEFAULT_CAP_N) -> Solution:
    """Minimum 2-edge-connected spanning subgraph of a 2EC (multi)graph."""
    return exact_kecss(g, 2, cap_n)


def exact_kecss(g: LabeledGraph, k: int, cap_n: int = DEFAULT_CAP_N) -> Solution:
    if g.n > cap_n:
        raise InputError(f"exact_kecss: n={g.n} exceeds cap {cap_n}")
    if not is_k_edge_connected(g, k):
        raise InputError(f"exact_kecss: graph is not {k}-edge-connected")
    if g.n <= 1:
        return Solution(edge_ids=frozenset(), meta={"apx_size": 0, "exact": True, "k_ec": k})
    lb = max(g.n - 1, math.ceil(g.n * k / 2))
    best = _minimum_feasible(
        g,
        lambda s: is_connected(range(g.n), [(e, g.edge_by_id[e].u, g.edge_by_id[e].v) for e in s])
        and _subset_k_edge_connected(g, s, k),
        lb)
    if best is None:
        raise InputError("exact_kecss: unexpectedly found no solution")
    return Solution(edge_ids=frozenset(best),
                    meta={"apx_size": len(best), "exact": True, "k_ec": k})


def _subset_k_edge_connected(g: LabeledGraph, eids: Iterable[int], k: int) -> bool:
    from .graph import edge_connectivity_at_least
    triples = [(e, g.edge_by_id[e].u, g.edge_by_id[e].v) for e in eids]
    return edge_connectivity_at_least(range(g.n), triples, k)
