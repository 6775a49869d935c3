"""Monte Carlo pipelines over the strategy cube and the tactic sphere.

Draw strategies, solve each for the frequency triple at which it is
optimal, classify transitivity, and measure how much of the simplex the
surviving triples cover on a triangular grid.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .classical import sample_uniform_strategy
from .core import (
    ConditionalStrategy,
    FrequencyTriple,
    OutsideSimplexError,
    SingularSystemError,
    solve_optimal_frequencies,
)
from .preferences import DEFAULT_EPSILON, TransitivityLabel, classify
from .quantum import haar_sample, strategy_from_tactic

MODELS = ("classical", "quantum")
CLASS_FILTERS = ("all", "intransitive1", "intransitive2", "transitive1", "transitive2")

REJECT_SINGULAR = "singular"
REJECT_OUTSIDE_SIMPLEX = "outside_simplex"

_INTRANSITIVE = (
    TransitivityLabel.INTRANSITIVE_FORWARD,
    TransitivityLabel.INTRANSITIVE_REVERSE,
)


class EmptyInputError(ValueError):
    """No record carries a frequency triple."""


@dataclass(frozen=True, slots=True)
class SampleRecord:
    """One Monte Carlo draw, solved and classified.

    Exactly one of ``frequencies`` and ``reject_reason`` is set; the labels
    are present iff the frequencies are.
    """

    model: str
    draw_index: int
    source: tuple[float, ...]
    strategy: ConditionalStrategy
    frequencies: FrequencyTriple | None
    reject_reason: str | None
    type1: TransitivityLabel | None
    type2: TransitivityLabel | None


@dataclass(frozen=True)
class CoverageReport:
    """Occupancy of the depth-k triangular grid over the simplex.

    The simplex splits into k^2 congruent cells; a cell is keyed by the
    floor triple of k times the barycentric coordinates (summing to k-1 for
    upward cells, k-2 for downward ones).
    """

    depth: int
    occupied_cells: int
    total_cells: int
    occupancy: float
    cell_counts: dict[tuple[int, int, int], int]


def _matches(class_filter: str, classification) -> bool:
    if class_filter == "all":
        return True
    if classification is None:
        return False
    if class_filter == "intransitive1":
        return classification.type1 in _INTRANSITIVE
    if class_filter == "intransitive2":
        return classification.type2 in _INTRANSITIVE
    if class_filter == "transitive1":
        return classification.type1 is TransitivityLabel.TRANSITIVE
    return classification.type2 is TransitivityLabel.TRANSITIVE


def _partition_sizes(n: int, partitions: int) -> list[int]:
    base, extra = divmod(n, partitions)
    return [base + (1 if w < extra else 0) for w in range(partitions)]


def run_experiment(
    model: str,
    n: int,
    seed: int,
    class_filter: str = "all",
    partitions: int = 1,
    epsilon: float = DEFAULT_EPSILON,
) -> list[SampleRecord]:
    """Draw, solve, and classify ``n`` strategies of the given model.

    Rejections (singular offer matrix, solution outside the simplex) are
    recorded rather than raised, and survive only the ``all`` filter.  Each
    partition draws from its own generator keyed by (seed, partition index),
    so output is deterministic for a fixed (model, n, seed, partitions).

    Args:
        model: "classical" (uniform cube) or "quantum" (uniform sphere).
        n: number of draws, split across partitions.
        seed: base seed for the per-partition generators.
        class_filter: one of CLASS_FILTERS; "all" keeps rejections too.
        partitions: number of independent sub-streams.
        epsilon: tie tolerance for classification.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    if class_filter not in CLASS_FILTERS:
        raise ValueError(f"unknown class filter {class_filter!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if partitions < 1 or partitions > n:
        raise ValueError("partitions must be in [1, n]")

    records: list[SampleRecord] = []
    offset = 0
    for worker, size in enumerate(_partition_sizes(n, partitions)):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(worker,)))
        for local in range(size):
            if model == "classical":
                strategy = sample_uniform_strategy(rng)
                source = strategy.free_coords()
            else:
                tactic = haar_sample(rng)
                source = tactic.as_tuple()
                strategy = strategy_from_tactic(tactic)

            reject_reason = None
            frequencies = None
            classification = None
            try:
                frequencies = solve_optimal_frequencies(strategy)
            except SingularSystemError:
                reject_reason = REJECT_SINGULAR
            except OutsideSimplexError:
                reject_reason = REJECT_OUTSIDE_SIMPLEX
            else:
                classification = classify(strategy, epsilon)

            if not _matches(class_filter, classification):
                continue
            records.append(
                SampleRecord(
                    model=model,
                    draw_index=offset + local,
                    source=source,
                    strategy=strategy,
                    frequencies=frequencies,
                    reject_reason=reject_reason,
                    type1=classification.type1 if classification else None,
                    type2=classification.type2 if classification else None,
                )
            )
        offset += size
    return records


def ternary_cell(q: FrequencyTriple, depth: int) -> tuple[int, int, int]:
    """Grid cell of a simplex point at the given subdivision depth.

    Floors of depth*q identify the cell; lattice points (and roundoff on
    them) are pushed into an adjacent cell so every point lands in exactly
    one of the depth^2 triangles.
    """
    scaled = (depth * q.q0, depth * q.q1, depth * q.q2)
    floors = [math.floor(v) for v in scaled]
    fracs = [v - f for v, f in zip(scaled, floors)]
    # Exact lattice points give floor sums of depth; all-high roundoff can
    # give depth-3.  Valid cells sum to depth-1 (upward) or depth-2 (down).
    while sum(floors) > depth - 1:
        i = floors.index(max(floors))
        floors[i] -= 1
        fracs[i] = 0.0
    while sum(floors) < depth - 2:
        i = fracs.index(max(fracs))
        floors[i] += 1
        fracs[i] = -1.0
    return (floors[0], floors[1], floors[2])


def coverage(records: list[SampleRecord], depth: int) -> CoverageReport:
    """Bin the records' frequency triples into the depth-k triangular grid.

    Raises EmptyInputError if no record carries a frequency triple.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    counts: Counter[tuple[int, int, int]] = Counter()
    for record in records:
        if record.frequencies is None:
            continue
        counts[ternary_cell(record.frequencies, depth)] += 1
    if not counts:
        raise EmptyInputError("no record carries a frequency triple")
    total = depth * depth
    return CoverageReport(
        depth=depth,
        occupied_cells=len(counts),
        total_cells=total,
        occupancy=len(counts) / total,
        cell_counts=dict(counts),
    )
