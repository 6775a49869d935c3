"""Optimal-strategy construction on the simplex and sampling of the cube.

For every interior frequency triple there is a four-parameter family of
strategies that put each food in the diet with frequency exactly 1/3.  The
parameters fix the four conditional probabilities answered under foods 1
and 2; the box constraints on them are precisely the requirement that all
twelve probabilities stay inside [0, 1].
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .core import ConditionalStrategy, FrequencyTriple, is_optimal

ClassPredicate = Callable[[ConditionalStrategy], bool]


class BoundaryFrequencyError(ValueError):
    """A frequency component is zero where an interior triple is required."""


class InfeasibleParametersError(ValueError):
    """The parameter vector violates its feasibility box for this triple."""


class SamplingExhaustedError(RuntimeError):
    """Rejection sampling gave up before finding an acceptable strategy."""


@dataclass(frozen=True, slots=True)
class ParamVector:
    """Parameters of the inverse construction; feasibility depends on the triple."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)


def _require_interior(q: FrequencyTriple) -> None:
    if not q.is_interior:
        raise BoundaryFrequencyError(
            f"frequency triple {q.as_tuple()} touches the simplex boundary"
        )


def params_feasible(q: FrequencyTriple, params: ParamVector) -> bool:
    """Whether the parameters yield valid probabilities for this triple.

    All inequalities are closed; boundary parameters are accepted.
    """
    _require_interior(q)
    a, b, g, d = params.as_tuple()
    if not (0.0 <= a <= q.q1 and 0.0 <= g <= q.q1):
        return False
    if not (0.0 <= b <= q.q2 and 0.0 <= d <= q.q2):
        return False
    lhs = -a + g + d
    if not (2.0 / 3.0 - q.q0 - q.q1 <= lhs <= 2.0 / 3.0 - q.q1):
        return False
    rhs = b + g + d
    return 1.0 / 3.0 + q.q2 - q.q0 <= rhs <= 1.0 / 3.0 + q.q2


def _clip01(value: float) -> float:
    return 0.0 if value < 0.0 else (1.0 if value > 1.0 else value)


def optimal_strategy_from_params(
    q: FrequencyTriple, params: ParamVector
) -> ConditionalStrategy:
    """Strategy that is optimal at ``q``, selected by the parameter vector.

    Raises:
        BoundaryFrequencyError: some component of ``q`` is zero.
        InfeasibleParametersError: the parameters fail their feasibility box.
    """
    if not params_feasible(q, params):
        raise InfeasibleParametersError(
            f"parameters {params.as_tuple()} are infeasible for {q.as_tuple()}"
        )
    a, b, g, d = params.as_tuple()
    strategy = ConditionalStrategy(
        _clip01((-2.0 + 3.0 * (-a + g + d + q.q0 + q.q1)) / (3.0 * q.q0)),
        _clip01((1.0 + 3.0 * (-b - g - d + q.q2)) / (3.0 * q.q0)),
        _clip01(a / q.q1),
        _clip01(g / q.q1),
        _clip01(b / q.q2),
        _clip01(d / q.q2),
    )
    if not is_optimal(strategy, q, 1e-10):
        raise ArithmeticError(
            f"constructed strategy misses the 1/3 diet target at {q.as_tuple()}"
        )
    return strategy


def sample_uniform_strategy(rng: np.random.Generator) -> ConditionalStrategy:
    """Strategy with the six free coordinates i.i.d. uniform on [0, 1]."""
    u = rng.random(6)
    return ConditionalStrategy(
        float(u[0]), float(u[1]), float(u[2]), float(u[3]), float(u[4]), float(u[5])
    )


def sample_param_vector(q: FrequencyTriple, rng: np.random.Generator) -> ParamVector:
    """Parameter vector uniform on the box [0,q1]^2 x [0,q2]^2."""
    u = rng.random(4)
    return ParamVector(
        q.q1 * float(u[0]), q.q2 * float(u[1]), q.q1 * float(u[2]), q.q2 * float(u[3])
    )


def sample_optimal_strategy(
    q: FrequencyTriple,
    rng: np.random.Generator,
    max_tries: int = 100_000,
    class_filter: ClassPredicate | None = None,
) -> ConditionalStrategy:
    """Rejection-sample a strategy optimal at ``q``, optionally class-filtered.

    Draws parameter vectors uniformly from their box, keeps the first
    feasible one whose strategy passes ``class_filter`` (when given).

    Raises:
        SamplingExhaustedError: no acceptable draw within ``max_tries``.
        BoundaryFrequencyError: ``q`` touches the simplex boundary.
    """
    _require_interior(q)
    if max_tries < 1:
        raise ValueError("max_tries must be at least 1")
    for _ in range(max_tries):
        params = sample_param_vector(q, rng)
        if not params_feasible(q, params):
            continue
        strategy = optimal_strategy_from_params(q, params)
        if class_filter is None or class_filter(strategy):
            return strategy
    raise SamplingExhaustedError(
        f"no acceptable strategy for {q.as_tuple()} in {max_tries} tries"
    )
