import random

import pytest

from flexconn.errors import InfeasibleInstanceError, InputError
from flexconn.exact import exact_2ecss, exact_solve
from flexconn.feasibility import Instance, check_fgc
from flexconn.fgc import (F1SolverHandle, TwoEcssSolverHandle,
                          alg2_double_and_solve, default_twoecss_solver,
                          double_safe_edges, solve_2ecss_blockwise, solve_fgc,
                          twoecss_prune_heuristic)
from flexconn.graph import is_k_edge_connected

from conftest import build, random_connected

EXACT = TwoEcssSolverHandle(kind="exact", cap_n=12, beta=1.0)


def fgc_opt(g):
    return exact_solve(Instance(graph=g, problem="fgc")).edge_ids


class TestDoubling:
    def test_doubles_only_safe_edges(self):
        g = build(3, [(0, 1), (1, 2), (0, 2)], edge_safe=[True, False, True])
        doubled = double_safe_edges(g)
        assert doubled.m == 5
        assert sorted(e.eid for e in doubled.edges) == [0, 1, 2, 3, 5]

    def test_c4_all_unsafe(self):
        g = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)], edge_safe=[False] * 4)
        sol = alg2_double_and_solve(g, EXACT)
        assert sol.size == 4

    def test_c4_one_safe_edge(self):
        g = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)],
                  edge_safe=[True, False, False, False])
        sol = alg2_double_and_solve(g, EXACT)
        assert sol.size == 4
        assert len(fgc_opt(g)) == 4

    def test_safe_path_collapses_duplicates(self):
        g = build(3, [(0, 1), (1, 2)], edge_safe=[True, True])
        sol = alg2_double_and_solve(g, EXACT)
        assert sol.edge_ids == frozenset({0, 1})

    def test_unsafe_bridge_infeasible(self):
        g = build(3, [(0, 1), (1, 2)], edge_safe=[True, False])
        with pytest.raises(InfeasibleInstanceError):
            alg2_double_and_solve(g, EXACT)


class TestPruneHeuristic:
    def test_k4_hamiltonian(self, k4):
        sol = twoecss_prune_heuristic(k4)
        assert sol.size == 4
        assert sorted(sol.edge_ids) == [1, 2, 3, 4]  # 02, 03, 12, 13

    def test_c5_nothing_removable(self):
        g = build(5, [(i, (i + 1) % 5) for i in range(5)])
        assert twoecss_prune_heuristic(g).size == 5

    def test_within_twice_optimum(self):
        rng = random.Random(61)
        done = 0
        while done < 15:
            g = random_connected(rng, rng.randint(3, 8), 0.55)
            if not is_k_edge_connected(g, 2):
                continue
            heur = twoecss_prune_heuristic(g).size
            opt = exact_2ecss(g).size
            assert heur <= 2 * opt
            assert heur <= 2 * g.n - 2
            done += 1

    def test_rejects_bridges(self):
        g = build(3, [(0, 1), (1, 2)])
        with pytest.raises(InputError):
            twoecss_prune_heuristic(g)


class TestBlockwise:
    def test_bowtie_union_of_triangles(self, bowtie):
        sol = solve_2ecss_blockwise(bowtie, EXACT)
        assert sol.size == 6

    def test_single_block_matches_direct(self, k4):
        assert solve_2ecss_blockwise(k4, EXACT).size == exact_2ecss(k4).size

    def test_bridge_block_rejected(self):
        g = build(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        with pytest.raises(InputError):
            solve_2ecss_blockwise(g, EXACT)

    def test_block_chains_match_whole_graph(self):
        rng = random.Random(67)
        done = 0
        while done < 10:
            # chain two random 2EC blobs at a shared vertex
            g1 = random_connected(rng, rng.randint(3, 5), 0.7)
            g2 = random_connected(rng, rng.randint(3, 5), 0.7)
            if not (is_k_edge_connected(g1, 2) and is_k_edge_connected(g2, 2)):
                continue
            offset = g1.n - 1  # glue vertex: last of g1 = vertex 0 of g2
            pairs = [(e.u, e.v) for e in g1.edges]
            pairs += [(e.u + offset, e.v + offset) for e in g2.edges]
            g = build(g1.n + g2.n - 1, pairs)
            blockwise = solve_2ecss_blockwise(g, EXACT).size
            direct = exact_2ecss(g, cap_n=12).size
            assert blockwise == direct
            done += 1


class TestSolveFgc:
    def test_c4_all_safe(self):
        g = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        sol = solve_fgc(g)
        assert sol.size == 3

    def test_c4_one_safe_edge(self):
        g = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)],
                  edge_safe=[True, False, False, False])
        sol = solve_fgc(g)
        assert sol.size == 4

    def test_external_f1_is_validated(self, c4):
        bad = F1SolverHandle(kind="external", fn=lambda g: {0})
        with pytest.raises(Exception):
            solve_fgc(c4, f1=bad)

    def test_random_instances_vs_oracle(self):
        rng = random.Random(71)
        done = 0
        while done < 25:
            g = random_connected(rng, rng.randint(3, 8), 0.5, edge_safe_prob=0.5)
            if not check_fgc(g, set(g.edge_by_id)):
                continue
            sol = solve_fgc(g, solver=EXACT)
            assert check_fgc(g, sol.edge_ids)
            opt = fgc_opt(g)
            opt_s = sum(1 for e in opt if g.edge_by_id[e].safe)
            opt_u = len(opt) - opt_s
            assert sol.meta["f2_size"] <= 2 * opt_s + opt_u
            assert sol.size <= 2 * len(opt)
            done += 1
