"""Strategy and frequency spaces of the three-food choice game.

Nature picks food ``i`` with frequency ``q_i`` and always offers it paired
with one of the two remaining foods, each pair with probability 1/2.  The
selecting player answers with twelve conditional probabilities
``P_i(C_k|B_j)``: the chance of choosing food ``k`` when Nature picked food
``i`` and food ``j`` is the one left out of the offered pair.  A strategy is
*optimal* for a frequency triple when every food ends up in the diet with
frequency exactly 1/3.

Solving for that triple maps the six-dimensional strategy cube onto the
two-dimensional frequency simplex.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

logger = logging.getLogger(__name__)

#: |det B| below this is treated as genuine rank deficiency, not roundoff.
SINGULARITY_TOL = 1e-10

#: Solved frequencies may undershoot zero by at most this much before the
#: strategy is rejected as having no optimal triple; smaller negatives are
#: clamped to zero.
NEGATIVE_CLAMP_TOL = 1e-12

#: Slack accepted when validating stored probabilities.
_PROB_TOL = 1e-9

ONE_THIRD = 1.0 / 3.0


class NoOptimalFrequencyError(Exception):
    """No frequency triple makes the strategy optimal."""


class SingularSystemError(NoOptimalFrequencyError):
    """The offer matrix is rank deficient."""


class OutsideSimplexError(NoOptimalFrequencyError):
    """The solved triple has a negative component."""


# The twelve conditional probabilities, keyed by (chosen food i, picked
# food k, excluded food j).  Six are stored; the other six are the context
# complements.
_PROB_FIELDS = {
    (0, 0, 2): ("p0_c0_b2", False),
    (0, 1, 2): ("p0_c0_b2", True),
    (0, 0, 1): ("p0_c0_b1", False),
    (0, 2, 1): ("p0_c0_b1", True),
    (1, 0, 2): ("p1_c0_b2", False),
    (1, 1, 2): ("p1_c0_b2", True),
    (1, 1, 0): ("p1_c1_b0", False),
    (1, 2, 0): ("p1_c1_b0", True),
    (2, 0, 1): ("p2_c0_b1", False),
    (2, 2, 1): ("p2_c0_b1", True),
    (2, 1, 0): ("p2_c1_b0", False),
    (2, 2, 0): ("p2_c1_b0", True),
}

FREE_COORD_NAMES = (
    "p0_c0_b2",
    "p0_c0_b1",
    "p1_c0_b2",
    "p1_c1_b0",
    "p2_c0_b1",
    "p2_c1_b0",
)


@dataclass(frozen=True, slots=True)
class ConditionalStrategy:
    """Twelve conditional choice probabilities, stored as six free coordinates.

    Within each (picked food, excluded food) context the two choice
    probabilities sum to one, so the six complements are derived on read and
    the coupling cannot be violated.  The six stored coordinates are the
    point of the strategy cube.
    """

    p0_c0_b2: float
    p0_c0_b1: float
    p1_c0_b2: float
    p1_c1_b0: float
    p2_c0_b1: float
    p2_c1_b0: float

    def __post_init__(self) -> None:
        for name in FREE_COORD_NAMES:
            value = getattr(self, name)
            if not -_PROB_TOL <= value <= 1.0 + _PROB_TOL:
                raise ValueError(f"{name}={value!r} is not a probability")

    # Context complements.
    @property
    def p0_c1_b2(self) -> float:
        return 1.0 - self.p0_c0_b2

    @property
    def p0_c2_b1(self) -> float:
        return 1.0 - self.p0_c0_b1

    @property
    def p1_c1_b2(self) -> float:
        return 1.0 - self.p1_c0_b2

    @property
    def p1_c2_b0(self) -> float:
        return 1.0 - self.p1_c1_b0

    @property
    def p2_c2_b1(self) -> float:
        return 1.0 - self.p2_c0_b1

    @property
    def p2_c2_b0(self) -> float:
        return 1.0 - self.p2_c1_b0

    def prob(self, i: int, k: int, j: int) -> float:
        """P_i(C_k|B_j) for any of the twelve valid index combinations."""
        try:
            field, complemented = _PROB_FIELDS[(i, k, j)]
        except KeyError:
            raise KeyError(f"no conditional probability P_{i}(C_{k}|B_{j})") from None
        value = getattr(self, field)
        return 1.0 - value if complemented else value

    def free_coords(self) -> tuple[float, float, float, float, float, float]:
        """The six stored coordinates, in canonical order."""
        return (
            self.p0_c0_b2,
            self.p0_c0_b1,
            self.p1_c0_b2,
            self.p1_c1_b0,
            self.p2_c0_b1,
            self.p2_c1_b0,
        )


@dataclass(frozen=True, slots=True)
class FrequencyTriple:
    """Barycentric point of the frequency simplex: Nature's food frequencies."""

    q0: float
    q1: float
    q2: float

    def __post_init__(self) -> None:
        if min(self.q0, self.q1, self.q2) < 0.0:
            raise ValueError(f"negative frequency in {self.as_tuple()}")
        if abs(self.q0 + self.q1 + self.q2 - 1.0) > 1e-12:
            raise ValueError(f"frequencies {self.as_tuple()} do not sum to 1")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.q0, self.q1, self.q2)

    @property
    def is_interior(self) -> bool:
        return self.q0 > 0.0 and self.q1 > 0.0 and self.q2 > 0.0


@dataclass(frozen=True, slots=True)
class OmegaTriple:
    """Appearance frequencies of the three foods in the resulting diet."""

    w0: float
    w1: float
    w2: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.w0, self.w1, self.w2)


@dataclass(frozen=True, slots=True)
class OfferMatrix:
    """The 3x3 matrix taking frequency triples to diet frequencies.

    Column-stochastic by complement coupling: each column stacks one full
    context pair halved plus two halves of coupled pairs.
    """

    rows: tuple[
        tuple[float, float, float],
        tuple[float, float, float],
        tuple[float, float, float],
    ]
    det: float


def _det3(rows) -> float:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _solve3(rows, rhs) -> list[float]:
    """Gaussian elimination with partial pivoting on an augmented 3x3 system.

    Backward stable, so solutions of bounded size carry residuals near
    machine precision even when the matrix is close to singular (where
    cofactor expansion would lose digits to cancellation).
    """
    a = [[*row, rhs[i]] for i, row in enumerate(rows)]
    for col in range(2):
        pivot = max(range(col, 3), key=lambda r: abs(a[r][col]))
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
        for row in range(col + 1, 3):
            factor = a[row][col] / a[col][col]
            for c in range(col, 4):
                a[row][c] -= factor * a[col][c]
    solution = [0.0, 0.0, 0.0]
    for row in (2, 1, 0):
        acc = a[row][3]
        for c in range(row + 1, 3):
            acc -= a[row][c] * solution[c]
        solution[row] = acc / a[row][row]
    return solution


def compute_omega(strategy: ConditionalStrategy, q: FrequencyTriple) -> OmegaTriple:
    """Diet frequencies of the three foods under a strategy and Nature's triple.

    Each conditional probability is weighted by half the frequency of the
    context it answers, since both pairs containing the picked food are
    offered with probability 1/2.
    """
    s = strategy
    h0, h1, h2 = q.q0 / 2.0, q.q1 / 2.0, q.q2 / 2.0
    w0 = s.p0_c0_b2 * h0 + s.p0_c0_b1 * h0 + s.p1_c0_b2 * h1 + s.p2_c0_b1 * h2
    w1 = s.p0_c1_b2 * h0 + s.p1_c1_b2 * h1 + s.p1_c1_b0 * h1 + s.p2_c1_b0 * h2
    w2 = s.p0_c2_b1 * h0 + s.p1_c2_b0 * h1 + s.p2_c2_b1 * h2 + s.p2_c2_b0 * h2
    return OmegaTriple(w0, w1, w2)


def build_offer_matrix(strategy: ConditionalStrategy) -> OfferMatrix:
    """Matrix form of the diet equations: compute_omega(s, q) == B @ q."""
    s = strategy
    rows = (
        ((s.p0_c0_b2 + s.p0_c0_b1) / 2.0, s.p1_c0_b2 / 2.0, s.p2_c0_b1 / 2.0),
        (s.p0_c1_b2 / 2.0, (s.p1_c1_b2 + s.p1_c1_b0) / 2.0, s.p2_c1_b0 / 2.0),
        (s.p0_c2_b1 / 2.0, s.p1_c2_b0 / 2.0, (s.p2_c2_b1 + s.p2_c2_b0) / 2.0),
    )
    return OfferMatrix(rows, _det3(rows))


def _closed_form_frequencies(
    strategy: ConditionalStrategy, det: float
) -> tuple[float, float, float]:
    """Expanded polynomial form of the solved frequencies.

    Algebraically identical to the Cramer solve (the numerators are 12x the
    Cramer numerators and the denominator 12*det absorbs the factor), but a
    different expression tree, kept as a cross-check against transcription
    errors in either path.
    """
    s = strategy
    d12 = 12.0 * det
    q0 = (
        2.0
        - s.p2_c0_b1
        - 2.0 * s.p2_c1_b0
        + 2.0 * s.p1_c1_b0
        + 3.0 * s.p1_c0_b2 * s.p2_c0_b1
        - 3.0 * s.p1_c1_b0 * s.p2_c0_b1
        + 3.0 * s.p1_c0_b2 * s.p2_c1_b0
        - 4.0 * s.p1_c0_b2
    ) / d12
    q1 = (
        -2.0
        + s.p2_c0_b1
        + 2.0 * s.p2_c1_b0
        + 2.0 * s.p0_c0_b1
        - 3.0 * s.p2_c1_b0 * s.p0_c0_b2
        - 3.0 * s.p2_c0_b1 * s.p0_c0_b2
        - 3.0 * s.p2_c1_b0 * s.p0_c0_b1
        + 4.0 * s.p0_c0_b2
    ) / d12
    return q0, q1, 1.0 - q0 - q1


def solve_optimal_frequencies(strategy: ConditionalStrategy) -> FrequencyTriple:
    """Frequency triple at which the strategy puts every food at 1/3.

    Solves ``B @ q = (1/3, 1/3, 1/3)`` by pivoted elimination.  The
    polynomial closed forms are evaluated alongside and any disagreement
    beyond 1e-8 is logged; the elimination solve is authoritative.

    Raises:
        SingularSystemError: |det B| below the singularity tolerance.
        OutsideSimplexError: some solved component is negative beyond the
            clamping tolerance.
    """
    matrix = build_offer_matrix(strategy)
    det = matrix.det
    if abs(det) < SINGULARITY_TOL:
        raise SingularSystemError(f"offer matrix is singular (det={det!r})")

    q0, q1, q2 = _solve3(matrix.rows, (ONE_THIRD, ONE_THIRD, ONE_THIRD))

    c0, c1, c2 = _closed_form_frequencies(strategy, det)
    deviation = max(abs(q0 - c0), abs(q1 - c1), abs(q2 - c2))
    # Both routes round identical algebra, so they drift apart by roughly
    # machine epsilon amplified by the solution size over |det|.  Only a
    # disagreement above that noise floor (never below 1e-8) can indicate a
    # transcription error in either expression.
    noise_floor = 5e-15 * max(1.0, abs(q0), abs(q1), abs(q2)) / abs(det)
    if deviation > max(1e-8, noise_floor):
        logger.warning(
            "closed-form frequencies deviate from the linear solve by %.3g "
            "for strategy %s", deviation, strategy.free_coords(),
        )

    if min(q0, q1, q2) < -NEGATIVE_CLAMP_TOL:
        raise OutsideSimplexError(
            f"solved frequencies ({q0!r}, {q1!r}, {q2!r}) leave the simplex"
        )
    # In-simplex solutions are bounded, so column stochasticity pins their
    # sum to 1 up to the solver's backward error.
    total = q0 + q1 + q2
    if abs(total - 1.0) > 1e-10:
        raise ArithmeticError(
            f"solved frequencies sum to {total!r}; the offer matrix should be "
            "column-stochastic"
        )
    return FrequencyTriple(
        q0 if q0 > 0.0 else 0.0,
        q1 if q1 > 0.0 else 0.0,
        q2 if q2 > 0.0 else 0.0,
    )


def is_optimal(
    strategy: ConditionalStrategy, q: FrequencyTriple, tol: float = 1e-9
) -> bool:
    """Whether every diet frequency is within ``tol`` of 1/3."""
    w = compute_omega(strategy, q)
    return (
        max(abs(w.w0 - ONE_THIRD), abs(w.w1 - ONE_THIRD), abs(w.w2 - ONE_THIRD))
        <= tol
    )
