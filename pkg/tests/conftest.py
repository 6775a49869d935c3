"""Shared fixtures, hypothesis strategies, and sampling helpers."""

import math

import pytest
from hypothesis import strategies as st

from foodgame import ConditionalStrategy, FrequencyTriple, ParamVector, Tactic
from foodgame.classical import params_feasible

unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)

conditional_strategies = st.builds(
    ConditionalStrategy,
    unit_floats,
    unit_floats,
    unit_floats,
    unit_floats,
    unit_floats,
    unit_floats,
)


@st.composite
def simplex_points(draw, min_part=0.0):
    """Frequency triples; with min_part > 0 they stay safely interior."""
    parts = [draw(st.floats(min_value=min_part, max_value=1.0)) for _ in range(3)]
    total = sum(parts)
    if total == 0.0:
        parts, total = [1.0, 1.0, 1.0], 3.0
    return FrequencyTriple(parts[0] / total, parts[1] / total, parts[2] / total)


@st.composite
def tactics(draw):
    xs = [
        draw(st.floats(min_value=-1.0, max_value=1.0, allow_nan=False))
        for _ in range(4)
    ]
    norm = math.sqrt(sum(x * x for x in xs))
    if norm < 1e-3:
        xs, norm = [1.0, 0.0, 0.0, 0.0], 1.0
    return Tactic(*(x / norm for x in xs))


def draw_feasible_params(q, rng, max_tries=1_000_000):
    """Feasible parameter vector for an interior triple.

    Draws (gamma, delta) from their box, then alpha and beta uniformly from
    the exact intervals the sum constraints leave open.  Unlike plain box
    rejection this stays efficient when a frequency component is tiny (the
    box acceptance rate shrinks quadratically with it); the final
    params_feasible check guards the rounding edge of an interval endpoint.
    """
    upper3 = 2.0 / 3.0 - q.q1
    lower3 = upper3 - q.q0
    upper4 = 1.0 / 3.0 + q.q2
    lower4 = upper4 - q.q0
    for _ in range(max_tries):
        g = q.q1 * rng.random()
        d = q.q2 * rng.random()
        lo_a = max(0.0, g + d - upper3)
        hi_a = min(q.q1, g + d - lower3)
        lo_b = max(0.0, lower4 - g - d)
        hi_b = min(q.q2, upper4 - g - d)
        if lo_a > hi_a or lo_b > hi_b:
            continue
        a = lo_a + (hi_a - lo_a) * rng.random()
        b = lo_b + (hi_b - lo_b) * rng.random()
        params = ParamVector(a, b, g, d)
        if params_feasible(q, params):
            return params
    raise AssertionError(f"no feasible parameters found for {q.as_tuple()}")


@pytest.fixture
def example_strategy():
    """The known optimal strategy at (20/24, 1/24, 3/24)."""
    return ConditionalStrategy(3 / 10, 17 / 40, 1 / 2, 1 / 2, 1 / 3, 1 / 3)


@pytest.fixture
def example_frequencies():
    return FrequencyTriple(20 / 24, 1 / 24, 3 / 24)


@pytest.fixture
def uniform_strategy():
    return ConditionalStrategy(0.5, 0.5, 0.5, 0.5, 0.5, 0.5)
