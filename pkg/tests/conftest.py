import itertools
import random

import pytest

from flexconn.graph import LabeledGraph, is_connected


def build(n, pairs, vertex_safe=None, edge_safe=None):
    return LabeledGraph.build(n, pairs, vertex_safe=vertex_safe, edge_safe=edge_safe)


@pytest.fixture
def c4():
    return build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k4():
    return build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 2
    return build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


FIX_A_PAIRS = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4), (1, 5), (3, 5)]
FIX_A_SAFE = [False, False, False, False, False, True]


@pytest.fixture
def fix_a():
    return build(6, FIX_A_PAIRS, vertex_safe=FIX_A_SAFE)


@pytest.fixture
def fix_b():
    return build(7, FIX_A_PAIRS + [(0, 6), (1, 6)], vertex_safe=FIX_A_SAFE + [False])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)


def random_connected(rng, n, p, vertex_safe_prob=1.0, edge_safe_prob=1.0):
    while True:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        triples = [(i, u, v) for i, (u, v) in enumerate(pairs)]
        if is_connected(range(n), triples):
            vs = [rng.random() < vertex_safe_prob for _ in range(n)]
            es = [rng.random() < edge_safe_prob for _ in pairs]
            return build(n, pairs, vertex_safe=vs, edge_safe=es)


def brute_force_blocks(g):
    """Maximal connected cut-vertex-free edge subsets, straight from the
    block definition; exponential, for small graphs only."""
    eids = sorted(g.edge_by_id)
    candidates = []
    for r in range(1, len(eids) + 1):
        for combo in itertools.combinations(eids, r):
            verts = set()
            for eid in combo:
                e = g.edge_by_id[eid]
                verts.update((e.u, e.v))
            if _connected_no_cut(g, verts, set(combo)):
                candidates.append(frozenset(combo))
    return {c for c in candidates
            if not any(c < other for other in candidates)}


def _connected_no_cut(g, verts, eids):
    def components(skip=None):
        remaining = verts - ({skip} if skip is not None else set())
        if not remaining:
            return 0
        seen = set()
        count = 0
        for s in remaining:
            if s in seen:
                continue
            count += 1
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for e in g.adj[x]:
                    if e.eid not in eids:
                        continue
                    y = e.other(x)
                    if y in remaining and y not in seen:
                        seen.add(y)
                        stack.append(y)
        return count

    if components() != 1:
        return False
    return all(components(skip=v) <= 1 for v in verts)


def brute_force_k_edge_connected(g, k):
    """k-edge-connectivity by removing every (k-1)-subset of edges."""
    if g.n <= 1:
        return True
    eids = sorted(g.edge_by_id)
    if not is_connected(range(g.n), [(e, g.edge_by_id[e].u, g.edge_by_id[e].v) for e in eids]):
        return False
    for removed in itertools.combinations(eids, min(k - 1, len(eids))):
        keep = [e for e in eids if e not in set(removed)]
        if not is_connected(range(g.n), [(e, g.edge_by_id[e].u, g.edge_by_id[e].v) for e in keep]):
            return False
    return True
