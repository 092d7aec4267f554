"""The flexible vertex connectivity solver.

Pipeline: preprocessing reductions (safe cut-vertex splits, forbidden-cycle
eliminations), then per piece either small-case enumeration, the spanning
tree shortcut, or the two approximations built on a long-ear decomposition:
a direct construction (apx1) and the rainbow/good-cycle construction (apx2),
returning the smaller.  The worst-case guarantee of the combination is 11/7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from .cycles import find_good_cycle
from .ears import (EarDecomposition, build_long_ear_decomposition,
                   find_forbidden_cycle, leftover_is_matching)
from .errors import InfeasibleInstanceError, InputError, require
from .feasibility import Instance, Solution, check_fvc
from .graph import (LabeledGraph, block_count, block_vertex_labels,
                    connected_components, cut_vertices, is_connected)
from .rainbow import PseudoEdge, PseudoEdgeSet, RainbowSolution, solve_rainbow

APPROX_NUM, APPROX_DEN = 11, 7


# ---------------------------------------------------------------------------
# Preprocessing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReconstructionPlan:
    forced_edge_ids: FrozenSet[int]
    events: Tuple[Tuple, ...] = ()

    def stitch(self, piece_solutions: Sequence[FrozenSet[int]]) -> FrozenSet[int]:
        out = set(self.forced_edge_ids)
        for sol in piece_solutions:
            out |= sol
        return frozenset(out)


def preprocess(g: LabeledGraph) -> Tuple[List[LabeledGraph], ReconstructionPlan]:
    """Reduce to 2VC, forbidden-cycle-free pieces (or pieces below 5 vertices).

    Order per step: tiny pieces are left for enumeration; a safe cut vertex x
    splits the graph into the x-closures of the components of G - x; a
    forbidden 4-cycle u-w-v-z (deg w = deg z = 2, wz absent) either forces
    the edges uw, wv and drops w (u, v both unsafe) or lets us drop the edge
    uw (v safe, and z relabeled safe whenever w is).
    """
    if not is_connected(range(g.n), [(e.eid, e.u, e.v) for e in g.edges]):
        raise InfeasibleInstanceError("graph is disconnected")
    pieces: List[LabeledGraph] = []
    forced: Set[int] = set()
    events: List[Tuple] = []
    _reduce(g, pieces, forced, events)
    return pieces, ReconstructionPlan(frozenset(forced), tuple(events))


def _reduce(g: LabeledGraph, pieces, forced, events) -> None:
    if g.n < 5:
        pieces.append(g)
        return
    cuts = sorted(cut_vertices(g))
    unsafe_cuts = [v for v in cuts if not g.vertex_safe[v]]
    if unsafe_cuts:
        raise InfeasibleInstanceError(
            f"unsafe cut vertex (local id {unsafe_cuts[0]}): instance infeasible")
    if cuts:
        x = cuts[0]
        comps = connected_components(
            set(range(g.n)) - {x},
            [(e.eid, e.u, e.v) for e in g.edges if x not in (e.u, e.v)])
        events.append(("split", g.n, len(comps)))
        for comp in comps:
            _reduce(g.induced(comp | {x}), pieces, forced, events)
        return
    fc = find_forbidden_cycle(g)
    if fc is not None:
        u, w, v, z = fc
        if not g.vertex_safe[u] and not g.vertex_safe[v]:
            e1 = g.edge_between(u, w)
            e2 = g.edge_between(w, v)
            forced.add(e1.eid)
            forced.add(e2.eid)
            events.append(("forbidden_unsafe", e1.eid, e2.eid))
            _reduce(g.induced(set(range(g.n)) - {w}), pieces, forced, events)
            return
        if g.vertex_safe[u] and not g.vertex_safe[v]:
            u, v = v, u
        if g.vertex_safe[w] and not g.vertex_safe[z]:
            w, z = z, w
        doomed = g.edge_between(u, w)
        events.append(("forbidden_safe", doomed.eid))
        _reduce(g.without_edges({doomed.eid}), pieces, forced, events)
        return
    pieces.append(g)


# ---------------------------------------------------------------------------
# Tree case
# ---------------------------------------------------------------------------

def solve_tree_case(g: LabeledGraph) -> Optional[FrozenSet[int]]:
    """An (n-1)-edge feasible solution if one exists, else None.

    For n >= 3 such a tree exists iff the safe vertices induce a connected
    subgraph dominating every unsafe vertex; then a safe spanning tree plus
    one pendant edge per unsafe vertex works.
    """
    if not is_connected(range(g.n), [(e.eid, e.u, e.v) for e in g.edges]):
        return None
    if g.n <= 1:
        return frozenset()
    if g.n == 2:
        return frozenset({min(e.eid for e in g.edges)})
    safe = [v for v in range(g.n) if g.vertex_safe[v]]
    if not safe:
        return None
    safe_set = set(safe)
    safe_triples = [(e.eid, e.u, e.v) for e in g.edges
                    if e.u in safe_set and e.v in safe_set]
    if len(connected_components(safe, safe_triples)) != 1:
        return None
    out: Set[int] = set()
    from .graph import UnionFind
    uf = UnionFind(safe)
    for eid, a, b in sorted(safe_triples):
        if uf.union(a, b):
            out.add(eid)
    for v in range(g.n):
        if g.vertex_safe[v]:
            continue
        anchors = [w for w in g.neighbors(v) if g.vertex_safe[w]]
        if not anchors:
            return None
        out.add(g.edge_between(v, anchors[0]).eid)
    require(len(out) == g.n - 1, "tree-case solution must have n-1 edges")
    require(check_fvc(g, out), "tree-case solution failed the checker")
    return frozenset(out)


# ---------------------------------------------------------------------------
# K-partition and apx1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KPartition:
    vd: FrozenSet[int]
    k11: FrozenSet[int]
    k12: FrozenSet[int]
    k22: FrozenSet[int]
    k23: FrozenSet[int]
    k22_pairs: Tuple[Tuple[int, int], ...]
    k23_pairs: Tuple[Tuple[int, int], ...]

    @property
    def kterm(self) -> Fraction:
        """|K11| + 2|K12| + |K22| + 3/2 |K23|: both the apx1 surcharge and the
        literal per-colour edge count of the rainbow realization."""
        return (len(self.k11) + 2 * len(self.k12) + len(self.k22)
                + Fraction(3, 2) * len(self.k23))


def _safe_vd_neighbors(g: LabeledGraph, v: int, vd: FrozenSet[int]) -> List[int]:
    return [w for w in g.neighbors(v) if w in vd and g.vertex_safe[w]]


def partition_k_sets(g: LabeledGraph, dec: EarDecomposition) -> KPartition:
    vd = frozenset(dec.vertices)
    leftover = set(range(g.n)) - vd
    comps = connected_components(
        leftover, [(e.eid, e.u, e.v) for e in g.edges
                   if e.u in leftover and e.v in leftover])
    k11: Set[int] = set()
    k12: Set[int] = set()
    k22_pairs: List[Tuple[int, int]] = []
    k23_pairs: List[Tuple[int, int]] = []
    for comp in comps:
        require(len(comp) <= 2, "leftover vertices must form a matching")
        if len(comp) == 1:
            v = min(comp)
            (k11 if _safe_vd_neighbors(g, v, vd) else k12).add(v)
        else:
            u, v = sorted(comp)
            u_anchor = bool(_safe_vd_neighbors(g, u, vd))
            v_anchor = bool(_safe_vd_neighbors(g, v, vd))
            cond_a = u_anchor and v_anchor
            cond_b = ((g.vertex_safe[u] and u_anchor)
                      or (g.vertex_safe[v] and v_anchor))
            (k22_pairs if cond_a or cond_b else k23_pairs).append((u, v))
    k22 = {x for p in k22_pairs for x in p}
    k23 = {x for p in k23_pairs for x in p}
    return KPartition(vd=vd, k11=frozenset(k11), k12=frozenset(k12),
                      k22=frozenset(k22), k23=frozenset(k23),
                      k22_pairs=tuple(sorted(k22_pairs)),
                      k23_pairs=tuple(sorted(k23_pairs)))


def _k22_edges(g: LabeledGraph, kp: KPartition, u: int, v: int) -> Set[int]:
    su = _safe_vd_neighbors(g, u, kp.vd)
    sv = _safe_vd_neighbors(g, v, kp.vd)
    if su and sv:
        return {g.edge_between(u, su[0]).eid, g.edge_between(v, sv[0]).eid}
    for a, b in ((u, v), (v, u)):
        anchors = _safe_vd_neighbors(g, a, kp.vd)
        if g.vertex_safe[a] and anchors:
            return {g.edge_between(a, b).eid, g.edge_between(a, anchors[0]).eid}
    raise InputError("pair classified K22 without a qualifying anchor")


def build_apx1(g: LabeledGraph, dec: EarDecomposition, kp: KPartition) -> FrozenSet[int]:
    out: Set[int] = set(dec.edge_ids(g))
    for v in sorted(kp.k11):
        out.add(g.edge_between(v, _safe_vd_neighbors(g, v, kp.vd)[0]).eid)
    for v in sorted(kp.k12):
        nbrs = g.neighbors(v)
        require(len(nbrs) >= 2 and all(w in kp.vd for w in nbrs),
                "a K12 vertex must have >= 2 decomposition neighbours")
        out.add(g.edge_between(v, nbrs[0]).eid)
        out.add(g.edge_between(v, nbrs[1]).eid)
    for u, v in kp.k22_pairs:
        out |= _k22_edges(g, kp, u, v)
    for u, v in kp.k23_pairs:
        out.add(g.edge_between(u, v).eid)
        out |= _k23_anchor_edges(g, kp, u, v)
    require(check_fvc(g, out), "apx1 failed the feasibility checker")
    bound = Fraction(4, 3) * (len(kp.vd) - 1) + kp.kterm
    require(Fraction(len(out)) <= bound, "apx1 exceeded its size bound")
    return frozenset(out)


def _k23_anchor_edges(g: LabeledGraph, kp: KPartition, u: int, v: int) -> Set[int]:
    au = [w for w in g.neighbors(u) if w in kp.vd]
    av = [w for w in g.neighbors(v) if w in kp.vd]
    for x in au:
        for y in av:
            if x != y:
                return {g.edge_between(u, x).eid, g.edge_between(v, y).eid}
    raise InputError("K23 pair with a single shared anchor contradicts 2VC input")


# ---------------------------------------------------------------------------
# Pseudo-edges and their realization
# ---------------------------------------------------------------------------

def build_pseudo_edges(g: LabeledGraph, dec: EarDecomposition, kp: KPartition) -> PseudoEdgeSet:
    """One colour per K12 vertex and one per matched K23 pair; pseudo-edges
    are generated by the three anchor rules for pairs and the neighbour-pair
    rule for singletons."""
    vd = kp.vd
    out: Set[PseudoEdge] = set()
    for u in sorted(kp.k12):
        nbrs = g.neighbors(u)
        require(all(w in vd for w in nbrs), "K12 neighbours must be anchors")
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                out.add(PseudoEdge(a, b, ("v", u)))
    for u, v in kp.k23_pairs:
        colour = ("p", u, v)
        au = [w for w in g.neighbors(u) if w in vd]
        av = [w for w in g.neighbors(v) if w in vd]
        for x, y in ((u, v), (v, u)):
            ax = au if x == u else av
            ay = av if x == u else au
            # rule 1: one anchor each, distinct
            for a in ax:
                for b in ay:
                    if a != b:
                        out.add(PseudoEdge(min(a, b), max(a, b), colour))
            # rule 2: x safely anchored, pseudo across y's anchor pairs
            if any(g.vertex_safe[a] for a in ax) and len(ay) >= 2:
                for i, a in enumerate(ay):
                    for b in ay[i + 1:]:
                        out.add(PseudoEdge(a, b, colour))
            # rule 3: x itself safe, pseudo across x's anchor pairs
            if g.vertex_safe[x]:
                for i, a in enumerate(ax):
                    for b in ax[i + 1:]:
                        out.add(PseudoEdge(a, b, colour))
    pe = PseudoEdgeSet(edges=tuple(sorted(out)))
    colours = set(pe.colours())
    wanted = {("v", u) for u in kp.k12} | {("p", u, v) for u, v in kp.k23_pairs}
    require(colours == wanted, "every colour needs at least one pseudo-edge")
    return pe


def realize_sp(g: LabeledGraph, kp: KPartition, rainbow: RainbowSolution) -> FrozenSet[int]:
    """Replace each chosen pseudo-edge by real edges (first applicable of the
    six pair cases, lowest-index ties), plus the K11 pendant rule and the K22
    two-edge rule."""
    out: Set[int] = set()
    for p in rainbow.chosen:
        if p.colour[0] == "v":
            u = p.colour[1]
            out.add(g.edge_between(u, p.a).eid)
            out.add(g.edge_between(u, p.b).eid)
        else:
            out |= _realize_pair_pseudo(g, kp, p)
    for v in sorted(kp.k11):
        out.add(g.edge_between(v, _safe_vd_neighbors(g, v, kp.vd)[0]).eid)
    for u, v in kp.k22_pairs:
        out |= _k22_edges(g, kp, u, v)
    expected = kp.kterm
    require(Fraction(len(out)) == expected,
            "realized edge count must equal the literal per-class formula")
    return frozenset(out)


def _realize_pair_pseudo(g: LabeledGraph, kp: KPartition, p: PseudoEdge) -> Set[int]:
    _, u, v = p.colour
    v1, v2 = p.a, p.b
    uv = g.edge_between(u, v)
    require(uv is not None, "pair colour without the matching edge")

    def eid(a, b):
        e = g.edge_between(a, b)
        return None if e is None else e.eid

    # case 1 / 2: a path v1-u-v-v2 (or v1-v-u-v2) plus the matching edge
    if eid(u, v1) is not None and eid(v, v2) is not None:
        return {eid(u, v1), eid(v, v2), uv.eid}
    if eid(u, v2) is not None and eid(v, v1) is not None:
        return {eid(u, v2), eid(v, v1), uv.eid}
    # case 3 / 4: a safe endpoint carries both anchors
    if g.vertex_safe[u] and eid(u, v1) is not None and eid(u, v2) is not None:
        return {eid(u, v1), eid(u, v2), uv.eid}
    if g.vertex_safe[v] and eid(v, v1) is not None and eid(v, v2) is not None:
        return {eid(v, v1), eid(v, v2), uv.eid}
    # case 5 / 6: both anchors on one endpoint, the other hangs off a safe vertex
    if eid(v, v1) is not None and eid(v, v2) is not None:
        anchors = _safe_vd_neighbors(g, u, kp.vd)
        if anchors:
            return {eid(v, v1), eid(v, v2), g.edge_between(u, anchors[0]).eid}
    if eid(u, v1) is not None and eid(u, v2) is not None:
        anchors = _safe_vd_neighbors(g, v, kp.vd)
        if anchors:
            return {eid(u, v1), eid(u, v2), g.edge_between(v, anchors[0]).eid}
    raise InputError(f"no realization case applies to pseudo-edge {p}")


# ---------------------------------------------------------------------------
# Algorithms 1-3
# ---------------------------------------------------------------------------

def _pseudo_triples(chosen: Sequence[PseudoEdge]):
    return [(("pe", i), p.a, p.b) for i, p in enumerate(chosen)]


def _induced_triples(g: LabeledGraph, inside: Set[int]):
    return [(e.eid, e.u, e.v) for e in g.edges if e.u in inside and e.v in inside]


def algorithm1_buy_good_cycles(g: LabeledGraph, vd: FrozenSet[int],
                               rainbow: RainbowSolution
                               ) -> Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int]]:
    """Buy good cycles until none exists; returns (x1, s1, large component A)."""
    pseudo = _pseudo_triples(rainbow.chosen)
    s1: Set[int] = set()
    while True:
        parts = [frozenset(c) for c in connected_components(
            vd, pseudo + [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in s1])]
        cyc = find_good_cycle(g, set(vd), parts)
        if cyc is None:
            break
        require(not (cyc & s1), "a good cycle must consist of new edges")
        s1 |= cyc
    comps = connected_components(
        vd, pseudo + [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in s1])
    larges = [c for c in comps if len(c) >= 2]
    require(len(larges) == 1, "exactly one large component must remain")
    a = frozenset(larges[0])
    rest = set(vd) - a
    require(all(not (g.neighbor_sets[u] & rest) for u in rest),
            "the remainder must be independent in the decomposition graph")
    x1 = frozenset(rainbow.singletons & a)
    require(2 * len(s1) <= 4 * rainbow.alpha_large + 3 * len(x1) - 4,
            "|S1| exceeded 2 alpha_large + 3/2 |X1| - 2")
    return x1, frozenset(s1), a


def algorithm2_make_2vc(g: LabeledGraph, vd: FrozenSet[int],
                        rainbow: RainbowSolution, s1: FrozenSet[int],
                        a: FrozenSet[int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Grow the large component to a single block; returns (x2, s2).

    First phase pulls in outside vertices (plus two attachment edges each)
    while the induced-plus-pseudo graph has several blocks; second phase adds
    single block-reducing edges to the bought graph until it has one block.
    """
    pseudo = _pseudo_triples(rainbow.chosen)
    cur: Set[int] = set(a)
    s2: Set[int] = set()

    def bought_triples():
        return pseudo + [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v)
                         for eid in sorted(s1 | s2)]

    while block_count(cur, _induced_triples(g, cur) + pseudo) > 1:
        base = block_count(cur, _induced_triples(g, cur) + pseudo)
        pick = None
        for v in sorted(set(vd) - cur):
            trial = cur | {v}
            if block_count(trial, _induced_triples(g, trial) + pseudo) < base:
                pick = v
                break
        require(pick is not None, "no block-reducing vertex found")
        v = pick
        _, touching = block_vertex_labels(cur, bought_triples())
        incident = sorted((e.eid, e.other(v)) for e in g.adj[v] if e.other(v) in cur)
        chosen_pair = None
        for i, (eid1, u) in enumerate(incident):
            for eid2, w in incident[i + 1:]:
                if u != w and not (touching[u] & touching[w]):
                    chosen_pair = (eid1, eid2)
                    break
            if chosen_pair:
                break
        require(chosen_pair is not None, "no block-reducing edge pair found")
        cur.add(v)
        s2.update(chosen_pair)

    from .graph import find_block_reducing_key
    while block_count(cur, bought_triples()) > 1:
        candidates = [(e.eid, e.u, e.v) for e in g.edges
                      if e.u in cur and e.v in cur and e.eid not in (s1 | s2)]
        key = find_block_reducing_key(cur, bought_triples(), sorted(candidates))
        require(key is not None, "a block-reducing edge must exist")
        s2.add(key)

    x2 = frozenset(cur - a)
    require(len(s2) <= len(x2) + len(vd) - rainbow.alpha - rainbow.alpha_large,
            "|S2| exceeded |X2| + |V(D)| - alpha - alpha_large")
    return x2, frozenset(s2)


def algorithm3_make_feasible(g: LabeledGraph, vd: FrozenSet[int],
                             a: FrozenSet[int], x2: FrozenSet[int]
                             ) -> Tuple[FrozenSet[int], FrozenSet[int], int, int]:
    """Attach every leftover decomposition vertex: one edge to a safe
    neighbour when possible, otherwise two distinct edges."""
    core = set(a) | set(x2)
    x3 = frozenset(set(vd) - core)
    s3: Set[int] = set()
    alpha1p = alpha2p = 0
    for v in sorted(x3):
        safe_nbrs = [w for w in g.neighbors(v) if w in core and g.vertex_safe[w]]
        if safe_nbrs:
            s3.add(g.edge_between(v, safe_nbrs[0]).eid)
            alpha1p += 1
        else:
            nbrs = [w for w in g.neighbors(v) if w in core]
            require(len(nbrs) >= 2,
                    "an unattachable leftover vertex contradicts 2VC input")
            s3.add(g.edge_between(v, nbrs[0]).eid)
            s3.add(g.edge_between(v, nbrs[1]).eid)
            alpha2p += 1
    require(len(s3) == alpha1p + 2 * alpha2p, "|S3| must equal a1' + 2 a2'")
    return x3, frozenset(s3), alpha1p, alpha2p


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------

def solve_fvc(g: LabeledGraph) -> Solution:
    """Best of the two approximations, after preprocessing; the solution
    always passes the feasibility checker, and meta carries the internal
    lower bound together with the pipeline statistics."""
    if not check_fvc(g, set(g.edge_by_id)):
        raise InfeasibleInstanceError("FVC instance is infeasible")
    pieces, plan = preprocess(g)
    piece_solutions: List[FrozenSet[int]] = []
    piece_meta: List[dict] = []
    lower_bound = len(plan.forced_edge_ids)
    for piece in pieces:
        sol = _solve_piece(piece)
        piece_solutions.append(sol.edge_ids)
        piece_meta.append(sol.meta)
        lower_bound += sol.meta["lower_bound"]
    total = plan.stitch(piece_solutions)
    require(check_fvc(g, total), "stitched FVC solution failed the checker")
    meta = {
        "problem": "fvc", "n": g.n, "m": g.m, "k": 1,
        "apx_size": len(total),
        "lower_bound": lower_bound,
        "forced_edges": len(plan.forced_edge_ids),
        "pieces": piece_meta,
        "reduction_events": [list(ev) for ev in plan.events],
    }
    return Solution(edge_ids=total, meta=meta)


def _solve_piece(g: LabeledGraph) -> Solution:
    if g.n < 5:
        from .exact import exact_solve
        sol = exact_solve(Instance(graph=g, problem="fvc"))
        meta = {"branch": "enumeration", "n": g.n,
                "apx_size": sol.size, "lower_bound": sol.size}
        return Solution(edge_ids=sol.edge_ids, meta=meta)
    tree = solve_tree_case(g)
    if tree is not None:
        return Solution(edge_ids=tree,
                        meta={"branch": "tree", "n": g.n,
                              "apx_size": len(tree), "lower_bound": g.n - 1})
    dec = build_long_ear_decomposition(g)
    require(leftover_is_matching(g, dec.vertices),
            "preprocessed piece must leave a matching outside the ears")
    kp = partition_k_sets(g, dec)
    apx1 = build_apx1(g, dec, kp)
    meta = {
        "branch": "apx1", "n": g.n,
        "vd": len(kp.vd), "ed": dec.edge_count,
        "k11": len(kp.k11), "k12": len(kp.k12),
        "k22": len(kp.k22), "k23": len(kp.k23),
        "apx1_size": len(apx1),
        "sp_paper_formula": float(len(kp.k11) + 2 * len(kp.k12) + 2 * len(kp.k22)
                                  + Fraction(3, 2) * len(kp.k23)),
    }
    if len(kp.k12) + len(kp.k23) <= 2:
        # apx1 alone is 4/3-approximate here
        meta.update({"apx_size": len(apx1),
                     "lower_bound": max(g.n, math.ceil(kp.kterm))})
        return Solution(edge_ids=apx1, meta=meta)

    pe = build_pseudo_edges(g, dec, kp)
    rainbow = solve_rainbow(pe, sorted(kp.vd))
    x1, s1, a = algorithm1_buy_good_cycles(g, kp.vd, rainbow)
    x2, s2 = algorithm2_make_2vc(g, kp.vd, rainbow, s1, a)
    x3, s3, alpha1p, alpha2p = algorithm3_make_feasible(g, kp.vd, a, x2)
    require(len(x3) == rainbow.alpha - rainbow.alpha_large - len(x1) - len(x2),
            "component bookkeeping mismatch: alpha != alpha_large+|X1|+|X2|+|X3|")
    sp = realize_sp(g, kp, rainbow)
    apx2 = frozenset(sp | s1 | s2 | s3)
    require(len(apx2) == len(sp) + len(s1) + len(s2) + len(s3),
            "apx2 pieces must be disjoint")
    require(check_fvc(g, apx2), "apx2 failed the feasibility checker")

    alpha, alpha_large = rainbow.alpha, rainbow.alpha_large
    alphap = alpha1p + alpha2p
    x = Fraction(alpha - alphap, 2) + Fraction(alpha_large, 2) + alpha1p
    ub2 = len(kp.vd) - 2 + len(sp) + alpha - x
    require(Fraction(len(apx2)) <= ub2, "apx2 exceeded its size bound")

    lb = max(len(sp) + alpha - 1,
             2 * len(kp.k12) - 2 * alpha_large + alpha1p + 2 * alpha2p,
             g.n)
    best = apx1 if len(apx1) <= len(apx2) else apx2
    meta.update({
        "branch": "min(apx1,apx2)",
        "apx2_size": len(apx2),
        "apx_size": len(best),
        "alpha": alpha, "alpha_large": alpha_large,
        "alpha1_prime": alpha1p, "alpha2_prime": alpha2p,
        "x1": len(x1), "x2": len(x2), "x3": len(x3),
        "sp_size": len(sp),
        "s1": len(s1), "s2": len(s2), "s3": len(s3),
        "lower_bound": lb,
        "reached_apx2": True,
    })
    return Solution(edge_ids=best, meta=meta)
