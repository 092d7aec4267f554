"""Command line interface.

Subcommands: solve, exact, check, gen, bench, lemmas.  Exit codes: 0 on
success, 2 for infeasible instances, 1 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import FlexconnError, InfeasibleInstanceError, InputError
from .exact import exact_solve
from .feasibility import Instance, Solution
from .fgc import TwoEcssSolverHandle, solve_fgc
from .fvc import solve_fvc
from .harness import (ExperimentConfig, check_arithmetic_lemmas,
                      gen_random_instance, gen_safe_tree_family,
                      lemma_report_text, run_ratio_experiment)
from .io import (check_solution, parse_instance, write_error, write_instance,
                 write_solution)
from .kfgc import KecssSolverHandle, solve_kfgc

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flexconn",
                     description="Flexible graph connectivity solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, need_input=True):
        if need_input:
            p.add_argument("-i", "--input", required=True, help="instance file")
        p.add_argument("-o", "--output", help="output file (default stdout)")

    p_solve = sub.add_parser("solve", help="run the approximation solver")
    p_solve.add_argument("--problem", required=True, choices=("fgc", "fvc", "kfgc"))
    p_solve.add_argument("--k", type=int, default=None)
    p_solve.add_argument("--exact-cap", type=int, default=None,
                         help="cap for exact subsolvers inside fgc/kfgc")
    add_io(p_solve)

    p_exact = sub.add_parser("exact", help="force the brute-force oracle")
    p_exact.add_argument("--problem", required=True, choices=("fgc", "fvc", "kfgc"))
    p_exact.add_argument("--k", type=int, default=None)
    p_exact.add_argument("--cap", type=int, default=10, help="refuse instances above this n")
    add_io(p_exact)

    p_check = sub.add_parser("check", help="validate a solution file")
    p_check.add_argument("--solution", required=True, help="solution JSON file")
    p_check.add_argument("--problem", default=None, choices=(None, "fgc", "fvc", "kfgc"))
    p_check.add_argument("--k", type=int, default=None)
    add_io(p_check)

    p_gen = sub.add_parser("gen", help="generate an instance")
    p_gen.add_argument("--family", default="random", choices=("random", "safe-tree"))
    p_gen.add_argument("--problem", default="fgc", choices=("fgc", "fvc", "kfgc"))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, default=0.5)
    p_gen.add_argument("--edge-safe-prob", type=float, default=0.5)
    p_gen.add_argument("--vertex-safe-prob", type=float, default=0.5)
    p_gen.add_argument("--k", type=int, default=1)
    p_gen.add_argument("--seed", type=int, default=0)
    add_io(p_gen, need_input=False)

    p_bench = sub.add_parser("bench", help="ratio experiment, CSV output")
    p_bench.add_argument("--problem", required=True, choices=("fgc", "fvc", "kfgc"))
    p_bench.add_argument("--trials", type=int, default=50)
    p_bench.add_argument("--n-min", type=int, default=4)
    p_bench.add_argument("--n-max", type=int, default=8)
    p_bench.add_argument("--p", type=float, default=0.45)
    p_bench.add_argument("--edge-safe-prob", type=float, default=0.5)
    p_bench.add_argument("--vertex-safe-prob", type=float, default=0.4)
    p_bench.add_argument("--k", type=int, default=1)
    p_bench.add_argument("--exact-cap", type=int, default=9)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--timing", action="store_true",
                         help="record wall times (breaks byte-for-byte determinism)")
    add_io(p_bench, need_input=False)

    p_lem = sub.add_parser("lemmas", help="sampled checks of the 11/7 size arithmetic")
    p_lem.add_argument("--samples", type=int, required=True)
    p_lem.add_argument("--seed", type=int, default=0)
    add_io(p_lem, need_input=False)

    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _load_instance(args, problem: str, k) -> Instance:
    return parse_instance(_read(args.input), problem=problem, k=k)


def _cmd_solve(args) -> int:
    inst = _load_instance(args, args.problem, args.k)
    g = inst.graph
    if inst.problem == "fvc":
        sol = solve_fvc(g)
    elif inst.problem == "fgc":
        cap = args.exact_cap if args.exact_cap is not None else 12
        solver = (TwoEcssSolverHandle(kind="exact", cap_n=cap, beta=1.0)
                  if g.n <= cap else TwoEcssSolverHandle(kind="prune_heuristic", beta=2.0))
        sol = solve_fgc(g, solver=solver)
    else:
        sub = (None if args.exact_cap is None
               else KecssSolverHandle(kind="exact", cap_n=args.exact_cap))
        sol = solve_kfgc(g, inst.k, sub=sub)
    sol.meta["feasible"] = check_solution(inst, sol.edge_ids)
    _emit(write_solution(sol), args.output)
    return EXIT_OK


def _cmd_exact(args) -> int:
    inst = _load_instance(args, args.problem, args.k)
    sol = exact_solve(inst, cap_n=args.cap)
    meta = dict(sol.meta)
    meta.update({"n": inst.graph.n, "m": inst.graph.m,
                 "lower_bound": sol.size, "exact_opt": sol.size,
                 "feasible": True})
    _emit(write_solution(Solution(sol.edge_ids, meta)), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    payload = json.loads(_read(args.solution))
    problem = args.problem or payload.get("problem")
    if problem not in ("fgc", "fvc", "kfgc"):
        raise InputError(f"cannot determine problem (got {problem!r})")
    k = args.k if args.k is not None else payload.get("k", 1)
    inst = _load_instance(args, problem, k)
    edges = payload.get("edges")
    if not isinstance(edges, list):
        raise InputError("solution file lacks an 'edges' list")
    ok = check_solution(inst, set(edges))
    _emit(json.dumps({"problem": problem, "k": inst.k,
                      "size": len(set(edges)), "feasible": ok}) + "\n",
          args.output)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def _cmd_gen(args) -> int:
    if args.family == "safe-tree":
        inst = gen_safe_tree_family(args.n, args.k)
    else:
        inst = gen_random_instance(args.n, args.p, args.edge_safe_prob,
                                   args.vertex_safe_prob, args.problem,
                                   args.k, args.seed)
    _emit(write_instance(inst), args.output)
    return EXIT_OK


def _cmd_bench(args) -> int:
    cfg = ExperimentConfig(problem=args.problem, trials=args.trials,
                           n_min=args.n_min, n_max=args.n_max, p=args.p,
                           edge_safe_prob=args.edge_safe_prob,
                           vertex_safe_prob=args.vertex_safe_prob,
                           k=args.k, exact_cap=args.exact_cap,
                           seed=args.seed, timing=args.timing)
    _emit(run_ratio_experiment(cfg), args.output)
    return EXIT_OK


def _cmd_lemmas(args) -> int:
    report = check_arithmetic_lemmas(args.samples, args.seed)
    _emit(lemma_report_text(report), args.output)
    return EXIT_OK if report.ok else EXIT_INFEASIBLE


_COMMANDS = {
    "solve": _cmd_solve,
    "exact": _cmd_exact,
    "check": _cmd_check,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
    "lemmas": _cmd_lemmas,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InfeasibleInstanceError as exc:
        sys.stdout.write(write_error("infeasible", str(exc)))
        return EXIT_INFEASIBLE
    except (InputError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"flexconn: error: {exc}\n")
        return EXIT_USAGE
    except FlexconnError as exc:
        sys.stderr.write(f"flexconn: internal error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
