"""Core undirected multigraph with safe/unsafe labels and stable edge ids.

Vertices are 0..n-1.  Edge ids are assigned once (typically in input file
order) and survive contraction, so solutions can always be reported in
original-instance ids.  Graphs are immutable; every operation here is a pure
function returning new values.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import InputError


@dataclass(frozen=True)
class Edge:
    eid: int
    u: int
    v: int
    safe: bool = True

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u

    def pair(self) -> Tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    vertex_safe: Tuple[bool, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        if len(self.vertex_safe) != self.n:
            raise InputError("vertex_safe length must equal n")
        seen = set()
        for e in self.edges:
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise InputError(f"edge {e.eid} endpoint out of range")
            if e.u == e.v:
                raise InputError(f"edge {e.eid} is a self-loop")
            if e.eid in seen:
                raise InputError(f"duplicate edge id {e.eid}")
            seen.add(e.eid)

    @staticmethod
    def build(n: int,
              pairs: Sequence[Tuple[int, int]],
              vertex_safe: Optional[Sequence[bool]] = None,
              edge_safe: Optional[Sequence[bool]] = None) -> "LabeledGraph":
        """Construct with edge ids 0,1,... in the order of `pairs`."""
        vs = tuple(True for _ in range(n)) if vertex_safe is None else tuple(vertex_safe)
        es = tuple(True for _ in pairs) if edge_safe is None else tuple(edge_safe)
        if len(es) != len(pairs):
            raise InputError("edge_safe length must equal number of edges")
        edges = tuple(Edge(i, u, v, es[i]) for i, (u, v) in enumerate(pairs))
        return LabeledGraph(n=n, vertex_safe=vs, edges=edges)

    @cached_property
    def edge_by_id(self) -> Dict[int, Edge]:
        return {e.eid: e for e in self.edges}

    @cached_property
    def adj(self) -> Dict[int, List[Edge]]:
        """Incident edges per vertex, sorted by (other endpoint, eid)."""
        a: Dict[int, List[Edge]] = {v: [] for v in range(self.n)}
        for e in self.edges:
            a[e.u].append(e)
            a[e.v].append(e)
        for v in a:
            a[v].sort(key=lambda e: (e.other(v), e.eid))
        return a

    @cached_property
    def neighbor_sets(self) -> Dict[int, Set[int]]:
        return {v: {e.other(v) for e in self.adj[v]} for v in range(self.n)}

    def neighbors(self, v: int) -> List[int]:
        return sorted(self.neighbor_sets[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_between(self, u: int, v: int) -> Optional[Edge]:
        """Lowest-id edge joining u and v, or None."""
        best = None
        for e in self.adj.get(u, ()):
            if e.other(u) == v and (best is None or e.eid < best.eid):
                best = e
        return best

    @cached_property
    def is_simple(self) -> bool:
        return len({e.pair() for e in self.edges}) == len(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def safe_edge_ids(self) -> Set[int]:
        return {e.eid for e in self.edges if e.safe}

    def unsafe_edge_ids(self) -> Set[int]:
        return {e.eid for e in self.edges if not e.safe}

    def induced(self, vertices: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph, vertices relabeled to 0..k-1 in sorted order.

        Edge ids are preserved (not relabeled), so solutions on the induced
        graph speak the original instance's edge language.
        """
        vs = sorted(set(vertices))
        if any(not (0 <= v < self.n) for v in vs):
            raise InputError("induced: vertex out of range")
        remap = {v: i for i, v in enumerate(vs)}
        keep = set(vs)
        edges = tuple(Edge(e.eid, remap[e.u], remap[e.v], e.safe)
                      for e in self.edges if e.u in keep and e.v in keep)
        return LabeledGraph(n=len(vs),
                            vertex_safe=tuple(self.vertex_safe[v] for v in vs),
                            edges=edges)

    def without_edges(self, eids: Iterable[int]) -> "LabeledGraph":
        drop = set(eids)
        unknown = drop - set(self.edge_by_id)
        if unknown:
            raise InputError(f"unknown edge ids {sorted(unknown)}")
        return LabeledGraph(self.n, self.vertex_safe,
                            tuple(e for e in self.edges if e.eid not in drop))


@dataclass(frozen=True)
class ContractionResult:
    graph: LabeledGraph
    vertex_map: Dict[int, int]      # original vertex id -> contracted vertex id
    edge_map: Dict[int, int]        # surviving edge id -> original edge id


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[FrozenSet[int], ...]
    cut_vertices: FrozenSet[int]


# ---------------------------------------------------------------------------
# Low-level routines over keyed edge lists.  These work on arbitrary vertex
# collections and arbitrary hashable edge keys, so the FVC pipeline can run
# them on multigraphs mixing real edges and pseudo-edges.
# ---------------------------------------------------------------------------

EdgeTriple = Tuple[Hashable, int, int]   # (key, u, v)


class UnionFind:
    __slots__ = ("parent", "size")

    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def component_count(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)


def connected_components(vertices: Iterable[int], edges: Iterable[EdgeTriple]) -> List[Set[int]]:
    uf = UnionFind(vertices)
    for _, u, v in edges:
        uf.union(u, v)
    comps: Dict[int, Set[int]] = {}
    for x in uf.parent:
        comps.setdefault(uf.find(x), set()).add(x)
    return sorted(comps.values(), key=min)


def is_connected(vertices: Iterable[int], edges: Iterable[EdgeTriple]) -> bool:
    uf = UnionFind(vertices)
    count = uf.component_count()
    for _, u, v in edges:
        if uf.union(u, v):
            count -= 1
    return count <= 1


def block_decomposition_edges(vertices: Iterable[int],
                              edges: Iterable[EdgeTriple]) -> Tuple[List[List[Hashable]], Set[int]]:
    """Blocks (as lists of edge keys) and cut vertices of a multigraph.

    Parallel edges land in one block: the second copy is a back edge closing
    a length-2 cycle.  Iterative Hopcroft-Tarjan so deep graphs cannot blow
    the recursion limit.
    """
    verts = sorted(set(vertices))
    adj: Dict[int, List[Tuple[int, Hashable]]] = {v: [] for v in verts}
    for key, u, v in edges:
        adj[u].append((v, key))
        adj[v].append((u, key))
    for v in verts:
        adj[v].sort(key=lambda t: (t[0], repr(t[1])))

    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    blocks: List[List[Hashable]] = []
    cut: Set[int] = set()
    timer = itertools.count()

    for root in verts:
        if root in disc:
            continue
        stack: List[Tuple[int, Optional[Hashable], int]] = [(root, None, 0)]
        edge_stack: List[Tuple[Hashable, int, int]] = []
        root_children = 0
        disc[root] = low[root] = next(timer)
        while stack:
            v, in_key, idx = stack[-1]
            if idx < len(adj[v]):
                stack[-1] = (v, in_key, idx + 1)
                w, key = adj[v][idx]
                if key == in_key:
                    continue
                if w not in disc:
                    disc[w] = low[w] = next(timer)
                    edge_stack.append((key, v, w))
                    stack.append((w, key, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append((key, v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    break
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    root_children += 1
                if low[v] >= disc[parent]:
                    # parent closes off the component hanging at v
                    comp: List[Hashable] = []
                    while edge_stack:
                        key, a, b = edge_stack[-1]
                        if disc[a] >= disc[v] or disc[b] >= disc[v]:
                            comp.append(key)
                            edge_stack.pop()
                        else:
                            break
                    blocks.append(comp)
                    if parent != root:
                        cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return blocks, cut


def block_count(vertices: Iterable[int], edges: Iterable[EdgeTriple]) -> int:
    bl, _ = block_decomposition_edges(vertices, edges)
    return len(bl)


def block_vertex_labels(vertices: Iterable[int],
                        edges: Sequence[EdgeTriple]) -> Tuple[int, Dict[int, Set[int]]]:
    """Block count plus, per vertex, the set of block indices touching it."""
    by_key = {key: (u, v) for key, u, v in edges}
    bl, _ = block_decomposition_edges(vertices, edges)
    touching: Dict[int, Set[int]] = {v: set() for v in set(vertices)}
    for i, comp in enumerate(bl):
        for key in comp:
            u, v = by_key[key]
            touching[u].add(i)
            touching[v].add(i)
    return len(bl), touching


def edge_connectivity_at_least(vertices: Sequence[int],
                               edges: Sequence[EdgeTriple],
                               k: int) -> bool:
    """True iff the multigraph's global min edge cut has >= k edges.

    Max-flow (unit capacity per edge copy) from a fixed source to every other
    vertex, with augmentation capped at k, so each s-t test costs O(k * m).
    A single-vertex graph counts as k-edge-connected for every k.
    """
    verts = sorted(set(vertices))
    if len(verts) <= 1:
        return True
    if k <= 0:
        return True
    cap: Dict[Tuple[int, int], int] = {}
    adj: Dict[int, List[int]] = {v: [] for v in verts}
    for _, u, v in edges:
        if u == v:
            continue
        if (u, v) not in cap:
            cap[(u, v)] = 0
            cap[(v, u)] = 0
            adj[u].append(v)
            adj[v].append(u)
        cap[(u, v)] += 1
        cap[(v, u)] += 1
    s = verts[0]
    for t in verts[1:]:
        if _max_flow_at_least(adj, dict(cap), s, t, k) < k:
            return False
    return True


def _max_flow_at_least(adj: Dict[int, List[int]],
                       residual: Dict[Tuple[int, int], int],
                       s: int, t: int, k: int) -> int:
    flow = 0
    while flow < k:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y in adj[x]:
                if y not in parent and residual[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        # unit-capacity augmenting path
        y = t
        while y != s:
            x = parent[y]
            residual[(x, y)] -= 1
            residual[(y, x)] += 1
            y = x
        flow += 1
    return flow


# ---------------------------------------------------------------------------
# Spec-level operations on LabeledGraph.
# ---------------------------------------------------------------------------

def _triples(g: LabeledGraph) -> List[EdgeTriple]:
    return [(e.eid, e.u, e.v) for e in g.edges]


def contract_vertices(g: LabeledGraph, group: Iterable[int]) -> ContractionResult:
    """Contract the vertex set `group` into one vertex; loops are dropped.

    The contracted vertex inherits id by order: vertices are renumbered
    0..n'-1 with the merged vertex placed at the position of its smallest
    member.  Cross-edge multiplicity is preserved.
    """
    members = set(group)
    if not members:
        raise InputError("contract_vertices: empty vertex set")
    if any(not (0 <= v < g.n) for v in members):
        raise InputError("contract_vertices: vertex out of range")
    anchor = min(members)
    kept = [v for v in range(g.n) if v not in members or v == anchor]
    vmap_kept = {v: i for i, v in enumerate(kept)}
    vertex_map = {v: vmap_kept[anchor] if v in members else vmap_kept[v]
                  for v in range(g.n)}
    merged_safe = all(g.vertex_safe[v] for v in members)
    vsafe = tuple(merged_safe if v == anchor else g.vertex_safe[v] for v in kept)
    new_edges = []
    edge_map: Dict[int, int] = {}
    for e in g.edges:
        nu, nv = vertex_map[e.u], vertex_map[e.v]
        if nu == nv:
            continue
        new_edges.append(Edge(e.eid, nu, nv, e.safe))
        edge_map[e.eid] = e.eid
    graph = LabeledGraph(len(kept), vsafe, tuple(new_edges))
    return ContractionResult(graph=graph, vertex_map=vertex_map, edge_map=edge_map)


def contract_edges(g: LabeledGraph, eids: Iterable[int]) -> ContractionResult:
    """Contract every connected component of (V, eids) to a single vertex."""
    chosen = set(eids)
    unknown = chosen - set(g.edge_by_id)
    if unknown:
        raise InputError(f"contract_edges: unknown edge ids {sorted(unknown)}")
    uf = UnionFind(range(g.n))
    for eid in chosen:
        e = g.edge_by_id[eid]
        uf.union(e.u, e.v)
    roots = sorted({uf.find(v) for v in range(g.n)}, key=lambda r: min(
        v for v in range(g.n) if uf.find(v) == r))
    comp_index = {}
    for i, r in enumerate(roots):
        comp_index[r] = i
    vertex_map = {v: comp_index[uf.find(v)] for v in range(g.n)}
    members: Dict[int, List[int]] = {}
    for v in range(g.n):
        members.setdefault(vertex_map[v], []).append(v)
    vsafe = tuple(all(g.vertex_safe[v] for v in members[i]) for i in range(len(roots)))
    new_edges = []
    edge_map: Dict[int, int] = {}
    for e in g.edges:
        nu, nv = vertex_map[e.u], vertex_map[e.v]
        if nu == nv:
            continue
        new_edges.append(Edge(e.eid, nu, nv, e.safe))
        edge_map[e.eid] = e.eid
    graph = LabeledGraph(len(roots), vsafe, tuple(new_edges))
    return ContractionResult(graph=graph, vertex_map=vertex_map, edge_map=edge_map)


def blocks(g: LabeledGraph) -> BlockDecomposition:
    bl, cut = block_decomposition_edges(range(g.n), _triples(g))
    ordered = sorted((frozenset(b) for b in bl), key=lambda s: min(s))
    return BlockDecomposition(blocks=tuple(ordered), cut_vertices=frozenset(cut))


def cut_vertices(g: LabeledGraph) -> FrozenSet[int]:
    if not is_connected(range(g.n), _triples(g)):
        raise InputError("cut_vertices: graph must be connected")
    return blocks(g).cut_vertices


def is_k_edge_connected(g: LabeledGraph, k: int) -> bool:
    if k < 1:
        raise InputError("is_k_edge_connected: k must be >= 1")
    return edge_connectivity_at_least(range(g.n), _triples(g), k)


def find_block_reducing_edge(g: LabeledGraph, h_edges: Iterable[int]) -> int:
    """Lowest-id edge of g outside h_edges whose addition strictly reduces
    the block count of the spanning subgraph (V, h_edges).

    (V, h_edges) must be a connected spanning subgraph of g with strictly
    more blocks than g; existence is then guaranteed.
    """
    chosen = set(h_edges)
    unknown = chosen - set(g.edge_by_id)
    if unknown:
        raise InputError(f"unknown edge ids {sorted(unknown)}")
    sub = [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in sorted(chosen)]
    eid = find_block_reducing_key(range(g.n), sub,
                                  [(e.eid, e.u, e.v) for e in g.edges
                                   if e.eid not in chosen])
    if eid is None:
        raise InputError("no reducing edge exists")
    return eid


def find_block_reducing_key(vertices: Sequence[int],
                            current: Sequence[EdgeTriple],
                            candidates: Sequence[EdgeTriple]):
    """First candidate (in given order) that strictly reduces the block count
    of (vertices, current), or None.

    Adding uv reduces the count iff u and v already lie in one component but
    share no block; same-block edges leave the count unchanged and
    cross-component edges raise it by one.
    """
    _, touching = block_vertex_labels(vertices, current)
    uf = UnionFind(vertices)
    for _, u, v in current:
        uf.union(u, v)
    for key, u, v in candidates:
        if uf.find(u) != uf.find(v):
            continue
        if touching[u] & touching[v]:
            continue
        return key
    return None
