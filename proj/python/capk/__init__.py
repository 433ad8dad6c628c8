"""Alpha-capped k-center clustering."""

import json

from ._core import (
    ClusteringSolution,
    Instance,
    brute_force_capped_opt,
    check_capped,
    fair_k_center,
    faster_algorithm,
    greedy_k_center,
    load_csv,
    max_additive_violation,
    non_dominant_k_center,
    run_json,
    solution_cost,
    synthetic_balanced,
)


def run(inst, algorithm="lp", k=25, alpha=0.5, epsilon=0.1, m=2, seed=0, timing=True):
    """Run one configuration and return the report as a dict."""
    return json.loads(run_json(inst, algorithm, k, alpha, epsilon, m, seed, timing))


__all__ = [
    "ClusteringSolution",
    "Instance",
    "brute_force_capped_opt",
    "check_capped",
    "fair_k_center",
    "faster_algorithm",
    "greedy_k_center",
    "load_csv",
    "max_additive_violation",
    "non_dominant_k_center",
    "run",
    "run_json",
    "solution_cost",
    "synthetic_balanced",
]
