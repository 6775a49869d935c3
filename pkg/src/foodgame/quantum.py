"""The entangled two-qubit tactic and the choice probabilities it induces.

Both players act on the maximally entangled state (|00> + |11>)/sqrt(2).
Nature's food pick selects one of three mutually unbiased measurement bases
for the left qubit; the selecting player applies a unitary to the right
qubit.  Reading the post-measurement right qubit in the basis matching the
offered pair yields the twelve conditional choice probabilities, so every
point of the unit 3-sphere acts as a strategy of the classical cube.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ConditionalStrategy, FrequencyTriple, solve_optimal_frequencies

_NORM_TOL = 1e-12

# Probability keys (i, k, j) whose values are the free strategy coordinates,
# in canonical order.
_FREE_KEYS = ((0, 0, 2), (0, 0, 1), (1, 0, 2), (1, 1, 0), (2, 0, 1), (2, 1, 0))


@dataclass(frozen=True, slots=True)
class Tactic:
    """Unit 4-vector parametrizing the selecting player's unitary."""

    x1: float
    x2: float
    x3: float
    x4: float

    def __post_init__(self) -> None:
        norm_sq = self.x1**2 + self.x2**2 + self.x3**2 + self.x4**2
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"tactic {self.as_tuple()} is not on the unit sphere")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x1, self.x2, self.x3, self.x4)


@dataclass(frozen=True, slots=True)
class TacticMatrix:
    """Unitary applied to the right qubit, in Euler-Rodrigues form.

    ``d`` here is the lower-right matrix entry, not a determinant.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        if abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0) > _NORM_TOL:
            raise ValueError("first row is not normalized")
        if abs(self.c + self.b.conjugate()) > _NORM_TOL:
            raise ValueError("c must equal -conj(b)")
        if abs(self.d - self.a.conjugate()) > _NORM_TOL:
            raise ValueError("d must equal conj(a)")


def haar_sample(rng: np.random.Generator) -> Tactic:
    """Tactic drawn uniformly (rotation-invariantly) from the unit 3-sphere.

    Four independent standard normals, normalized; redraws on the
    measure-zero event of a near-zero norm.
    """
    while True:
        v = rng.standard_normal(4)
        norm = math.sqrt(float(v @ v))
        if norm >= 1e-8:
            return Tactic(
                float(v[0]) / norm,
                float(v[1]) / norm,
                float(v[2]) / norm,
                float(v[3]) / norm,
            )


def tactic_matrix(tactic: Tactic) -> TacticMatrix:
    t = tactic
    return TacticMatrix(
        complex(t.x1, t.x2),
        complex(t.x3, t.x4),
        complex(-t.x3, t.x4),
        complex(t.x1, -t.x2),
    )


def _abs_sq(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def measurement_probabilities(tactic: Tactic) -> dict[tuple[int, int, int], float]:
    """All twelve conditional probabilities from the measurement amplitudes.

    Keys are (picked food i, chosen food k, excluded food j).  Values are
    squared moduli of the post-measurement right-qubit coordinates in the
    basis matching the offered pair; complement couplings hold up to
    rounding because the unitary preserves norms.
    """
    m = tactic_matrix(tactic)
    a, b, c, d = m.a, m.b, m.c, m.d
    return {
        (0, 0, 2): _abs_sq(a),
        (0, 1, 2): _abs_sq(b),
        (0, 0, 1): _abs_sq(b + d) / 2.0,
        (0, 2, 1): _abs_sq(b - d) / 2.0,
        (1, 0, 2): _abs_sq(a + b) / 2.0,
        (1, 1, 2): _abs_sq(c + d) / 2.0,
        (1, 1, 0): _abs_sq(a - b - 1j * c + 1j * d) / 4.0,
        (1, 2, 0): _abs_sq(a - b + 1j * c - 1j * d) / 4.0,
        (2, 0, 1): _abs_sq(a - 1j * b + c - 1j * d) / 4.0,
        (2, 2, 1): _abs_sq(a - 1j * b - c + 1j * d) / 4.0,
        (2, 1, 0): _abs_sq(a + 1j * b - 1j * c + d) / 4.0,
        (2, 2, 0): _abs_sq(a + 1j * b + 1j * c - d) / 4.0,
    }


def strategy_from_tactic(tactic: Tactic) -> ConditionalStrategy:
    """The strategy a tactic realizes through measurement.

    Rounding can push a squared modulus past [0, 1] by a few ulp; values are
    clipped back so the strategy invariants hold exactly.
    """
    probs = measurement_probabilities(tactic)
    coords = (min(max(probs[key], 0.0), 1.0) for key in _FREE_KEYS)
    return ConditionalStrategy(*coords)


def quadratic_free_coords(
    tactic: Tactic,
) -> tuple[float, float, float, float, float, float]:
    """Free strategy coordinates as real quadratic forms in the tactic.

    Cross-check oracle only: algebraically equal to the amplitude route in
    strategy_from_tactic but evaluated without complex arithmetic.
    """
    x1, x2, x3, x4 = tactic.as_tuple()
    return (
        x1 * x1 + x2 * x2,
        ((x1 + x3) ** 2 + (-x2 + x4) ** 2) / 2.0,
        ((x1 + x3) ** 2 + (x2 + x4) ** 2) / 2.0,
        ((x1 + x2 - x3 + x4) ** 2 + (x1 + x2 + x3 - x4) ** 2) / 4.0,
        ((x1 - x2 - x3 + x4) ** 2 + (-x1 + x2 - x3 + x4) ** 2) / 4.0,
        x1 * x1 + x3 * x3,
    )


def optimal_frequencies_from_tactic(tactic: Tactic) -> FrequencyTriple:
    """Frequency triple at which the tactic's strategy is optimal.

    Raises SingularSystemError or OutsideSimplexError when no triple exists,
    exactly as the underlying solve does.
    """
    return solve_optimal_frequencies(strategy_from_tactic(tactic))
