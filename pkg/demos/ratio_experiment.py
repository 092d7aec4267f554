"""Seeded ratio experiment: approximation sizes against the exact oracle.

Deterministic per seed; rerunning prints the identical CSV.  Enable the
timing column only when reproducibility of the bytes does not matter.
"""

from flexconn import ExperimentConfig, run_ratio_experiment

for problem in ("fvc", "fgc"):
    cfg = ExperimentConfig(problem=problem, trials=8, n_min=4, n_max=8,
                           seed=2026, exact_cap=8)
    print(f"--- {problem} ---")
    print(run_ratio_experiment(cfg))
