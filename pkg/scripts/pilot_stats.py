#!/usr/bin/env python3
"""Pilot statistics behind the frozen regression values in the acceptance suite.

Runs the coverage, contrast, and witness searches at the acceptance seed and
prints every number the acceptance tests assert against.  Rerun after any
change to the samplers or the solve to see whether the frozen values moved.
"""

import argparse
import time
from collections import Counter

import numpy as np

from foodgame import (
    FrequencyTriple,
    coverage,
    run_experiment,
    sample_optimal_strategy,
)
from foodgame.preferences import TransitivityLabel, classify

INTRANSITIVE = (
    TransitivityLabel.INTRANSITIVE_FORWARD,
    TransitivityLabel.INTRANSITIVE_REVERSE,
)


def max_component_statistic(records):
    return max(max(r.frequencies.as_tuple()) for r in records)


def interior_lattice(depth):
    points = []
    for i in range(1, depth - 1):
        for j in range(1, depth - i):
            k = depth - i - j
            if k >= 1:
                points.append(FrequencyTriple(i / depth, j / depth, k / depth))
    return points


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--n-coverage", type=int, default=100_000)
    parser.add_argument("--n-contrast", type=int, default=1_000_000)
    args = parser.parse_args()

    print(f"seed = {args.seed}")

    for model in ("classical", "quantum"):
        start = time.perf_counter()
        records = run_experiment(model, args.n_coverage, args.seed)
        elapsed = time.perf_counter() - start
        reasons = Counter(r.reject_reason for r in records if r.reject_reason)
        survivors = [r for r in records if r.frequencies is not None]
        report = coverage(records, 6)
        print(
            f"{model}: n={args.n_coverage} in {elapsed:.1f}s, "
            f"{len(survivors)} in simplex, rejects={dict(reasons)}"
        )
        print(f"  occupancy at depth 6: {report.occupancy} "
              f"({report.occupied_cells}/{report.total_cells})")
        if model == "quantum":
            for relation in ("type1", "type2"):
                subset = [
                    r
                    for r in survivors
                    if getattr(r, relation) is TransitivityLabel.TRANSITIVE
                ]
                sub_report = coverage(subset, 6)
                print(
                    f"  {relation} transitive: {len(subset)} records, "
                    f"occupancy {sub_report.occupancy} "
                    f"({sub_report.occupied_cells}/{sub_report.total_cells})"
                )

    stats = {}
    for model in ("classical", "quantum"):
        start = time.perf_counter()
        records = run_experiment(
            model, args.n_contrast, args.seed, class_filter="intransitive1"
        )
        elapsed = time.perf_counter() - start
        stats[model] = max_component_statistic(records)
        print(
            f"{model}: n={args.n_contrast} intransitive1 in {elapsed:.1f}s, "
            f"{len(records)} records, max max(q) = {stats[model]!r}"
        )
    print(f"contrast gap (classical - quantum) = {stats['classical'] - stats['quantum']!r}")

    rng = np.random.default_rng(args.seed)
    start = time.perf_counter()
    lattice = interior_lattice(12)
    slowest = 0.0
    for q in lattice:
        point_start = time.perf_counter()
        sample_optimal_strategy(
            q,
            rng,
            max_tries=100_000,
            class_filter=lambda s: classify(s).type2 in INTRANSITIVE,
        )
        slowest = max(slowest, time.perf_counter() - point_start)
    elapsed = time.perf_counter() - start
    print(
        f"lattice-12 type2 witnesses: all {len(lattice)} points found, "
        f"total {elapsed:.1f}s, slowest point {slowest:.2f}s"
    )


if __name__ == "__main__":
    main()
