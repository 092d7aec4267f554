import random

from flexconn.cycles import find_good_cycle, is_good_cycle
from flexconn.graph import connected_components, cut_vertices, is_connected

from conftest import build, random_connected


def triples_of(g, eids):
    return [(eid, g.edge_by_id[eid].u, g.edge_by_id[eid].v) for eid in sorted(eids)]


class TestChecker:
    def test_two_edge_cycle_between_large_parts(self):
        g = build(4, [(0, 2), (1, 3), (0, 1), (2, 3)])
        parts = [frozenset({0, 1}), frozenset({2, 3})]
        assert is_good_cycle(parts, triples_of(g, {0, 1}))

    def test_two_edge_cycle_with_singleton_rejected(self):
        g = build(3, [(0, 2), (1, 2), (0, 1)])
        parts = [frozenset({0, 1}), frozenset({2})]
        assert not is_good_cycle(parts, triples_of(g, {0, 1}))

    def test_shared_attachment_rejected(self):
        g = build(4, [(0, 2), (0, 3), (2, 3)])
        parts = [frozenset({0, 1}), frozenset({2}), frozenset({3})]
        # both part-0 edges attach at vertex 0
        assert not is_good_cycle(parts, triples_of(g, {0, 1, 2}))

    def test_three_edge_cycle_through_singletons(self):
        g = build(4, [(0, 2), (1, 3), (2, 3)])
        parts = [frozenset({0, 1}), frozenset({2}), frozenset({3})]
        assert is_good_cycle(parts, triples_of(g, {0, 1, 2}))


class TestFindGoodCycle:
    def test_two_large_parts(self):
        g = build(4, [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3)])
        parts = [frozenset({0, 1}), frozenset({2, 3})]
        cyc = find_good_cycle(g, {0, 1, 2, 3}, parts)
        assert cyc is not None
        assert is_good_cycle(parts, triples_of(g, cyc))

    def test_large_plus_adjacent_singletons(self):
        # large part {0,1}; singletons 2 and 3 adjacent to each other and the part
        g = build(4, [(0, 1), (0, 2), (2, 3), (3, 1)])
        parts = [frozenset({0, 1}), frozenset({2}), frozenset({3})]
        cyc = find_good_cycle(g, {0, 1, 2, 3}, parts)
        assert cyc is not None
        assert is_good_cycle(parts, triples_of(g, cyc))

    def test_none_when_single_large_and_independent_singletons(self):
        g = build(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        parts = [frozenset({0, 1}), frozenset({2}), frozenset({3})]
        assert find_good_cycle(g, {0, 1, 2, 3}, parts) is None

    def test_none_without_large_part(self):
        g = build(3, [(0, 1), (1, 2), (0, 2)])
        parts = [frozenset({0}), frozenset({1}), frozenset({2})]
        assert find_good_cycle(g, {0, 1, 2}, parts) is None

    def test_random_2vc_partitions_validate(self):
        rng = random.Random(4)
        produced = 0
        while produced < 40:
            g = random_connected(rng, rng.randint(4, 10), 0.55)
            triples = [(e.eid, e.u, e.v) for e in g.edges]
            if not is_connected(range(g.n), triples) or g.n < 3 or cut_vertices(g):
                continue
            # random partition with connected parts: grow parts from seeds
            seeds = rng.sample(range(g.n), rng.randint(2, max(2, g.n // 2)))
            owner = {s: i for i, s in enumerate(seeds)}
            frontier = list(seeds)
            while len(owner) < g.n:
                v = rng.choice(frontier)
                nxt = [w for w in g.neighbors(v) if w not in owner]
                if not nxt:
                    frontier.remove(v)
                    if not frontier:
                        frontier = [w for w in owner]
                    continue
                w = rng.choice(nxt)
                owner[w] = owner[v]
                frontier.append(w)
            parts = {}
            for v, i in owner.items():
                parts.setdefault(i, set()).add(v)
            part_list = [frozenset(p) for p in parts.values()]
            cyc = find_good_cycle(g, set(range(g.n)), part_list)
            larges = [p for p in part_list if len(p) >= 2]
            if cyc is None:
                # absence is only allowed in the documented cases
                singles = [min(p) for p in part_list if len(p) == 1]
                assert (not larges) or (
                    len(larges) == 1
                    and not any(b in g.neighbor_sets[a]
                                for i, a in enumerate(singles)
                                for b in singles[i + 1:]))
                continue
            assert is_good_cycle(part_list, triples_of(g, cyc))
            produced += 1
