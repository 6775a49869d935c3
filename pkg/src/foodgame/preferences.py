"""Pairwise food preferences and transitivity classification of strategies.

Each food pair is offered in two contexts (either member may be Nature's
pick).  The strict relation prefers x over y only when x is chosen more
often in both contexts; the aggregate relation compares the total choice
frequencies over the two contexts.  A strategy is intransitive when the
three pairwise outcomes close a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import ConditionalStrategy

DEFAULT_EPSILON = 1e-9

#: Ordered pairs whose all-SECOND outcomes form the forward cycle
#: 0 < 1, 1 < 2, 2 < 0.
CYCLE_PAIRS = ((0, 1), (1, 2), (2, 0))


class PreferenceOutcome(Enum):
    FIRST_PREFERRED = "first"
    SECOND_PREFERRED = "second"
    UNDEFINED = "undefined"


class TransitivityLabel(Enum):
    INTRANSITIVE_FORWARD = "intransitive_forward"
    INTRANSITIVE_REVERSE = "intransitive_reverse"
    TRANSITIVE = "transitive"
    DEGENERATE = "degenerate"


@dataclass(frozen=True, slots=True)
class Classification:
    """One transitivity label per preference relation."""

    type1: TransitivityLabel
    type2: TransitivityLabel


def _pair_indices(pair: tuple[int, int]) -> tuple[int, int, int]:
    x, y = pair
    if x == y or not {x, y} <= {0, 1, 2}:
        raise ValueError(f"not a food pair: {pair}")
    return x, y, 3 - x - y


def type1_preference(
    strategy: ConditionalStrategy,
    pair: tuple[int, int],
    epsilon: float = DEFAULT_EPSILON,
) -> PreferenceOutcome:
    """Strict preference within a pair: x wins only if it wins in both contexts.

    The pair (x, y) is offered when Nature picks x and when it picks y;
    FIRST_PREFERRED needs the probability of choosing x above 1/2 + epsilon
    in both contexts, SECOND_PREFERRED below 1/2 - epsilon in both.  Ties
    and context disagreement are UNDEFINED.
    """
    x, y, j = _pair_indices(pair)
    in_x_context = strategy.prob(x, x, j)
    in_y_context = strategy.prob(y, x, j)
    if in_x_context > 0.5 + epsilon and in_y_context > 0.5 + epsilon:
        return PreferenceOutcome.FIRST_PREFERRED
    if in_x_context < 0.5 - epsilon and in_y_context < 0.5 - epsilon:
        return PreferenceOutcome.SECOND_PREFERRED
    return PreferenceOutcome.UNDEFINED


def type2_preference(
    strategy: ConditionalStrategy,
    pair: tuple[int, int],
    epsilon: float = DEFAULT_EPSILON,
) -> PreferenceOutcome:
    """Aggregate preference: compare total choice frequency over both contexts."""
    x, y, j = _pair_indices(pair)
    total_x = strategy.prob(x, x, j) + strategy.prob(y, x, j)
    total_y = strategy.prob(x, y, j) + strategy.prob(y, y, j)
    if total_x - total_y > 2.0 * epsilon:
        return PreferenceOutcome.FIRST_PREFERRED
    if total_y - total_x > 2.0 * epsilon:
        return PreferenceOutcome.SECOND_PREFERRED
    return PreferenceOutcome.UNDEFINED


def _label(outcomes: list[PreferenceOutcome]) -> TransitivityLabel:
    if any(o is PreferenceOutcome.UNDEFINED for o in outcomes):
        return TransitivityLabel.DEGENERATE
    if all(o is PreferenceOutcome.SECOND_PREFERRED for o in outcomes):
        return TransitivityLabel.INTRANSITIVE_FORWARD
    if all(o is PreferenceOutcome.FIRST_PREFERRED for o in outcomes):
        return TransitivityLabel.INTRANSITIVE_REVERSE
    return TransitivityLabel.TRANSITIVE


def classify(
    strategy: ConditionalStrategy, epsilon: float = DEFAULT_EPSILON
) -> Classification:
    """Transitivity label of a strategy under both preference relations.

    Over the three cycle pairs, a uniform outcome direction is a cycle; any
    UNDEFINED outcome makes the label DEGENERATE; three defined outcomes
    with mixed directions are acyclic, hence TRANSITIVE.
    """
    return Classification(
        _label([type1_preference(strategy, p, epsilon) for p in CYCLE_PAIRS]),
        _label([type2_preference(strategy, p, epsilon) for p in CYCLE_PAIRS]),
    )
