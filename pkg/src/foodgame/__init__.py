"""Classical and quantum strategies of the three-food choice game."""

from .classical import (
    BoundaryFrequencyError,
    InfeasibleParametersError,
    ParamVector,
    SamplingExhaustedError,
    optimal_strategy_from_params,
    params_feasible,
    sample_optimal_strategy,
    sample_param_vector,
    sample_uniform_strategy,
)
from .core import (
    ConditionalStrategy,
    FrequencyTriple,
    NoOptimalFrequencyError,
    OfferMatrix,
    OmegaTriple,
    OutsideSimplexError,
    SingularSystemError,
    build_offer_matrix,
    compute_omega,
    is_optimal,
    solve_optimal_frequencies,
)
from .experiments import (
    CoverageReport,
    EmptyInputError,
    SampleRecord,
    coverage,
    run_experiment,
    ternary_cell,
)
from .preferences import (
    Classification,
    PreferenceOutcome,
    TransitivityLabel,
    classify,
    type1_preference,
    type2_preference,
)
from .quantum import (
    Tactic,
    TacticMatrix,
    haar_sample,
    measurement_probabilities,
    optimal_frequencies_from_tactic,
    quadratic_free_coords,
    strategy_from_tactic,
    tactic_matrix,
)
from .report import (
    SvgOptions,
    TernaryPoint,
    emit_csv,
    emit_svg,
    read_csv_records,
    ternary_xy,
)

__all__ = [
    "BoundaryFrequencyError",
    "Classification",
    "ConditionalStrategy",
    "CoverageReport",
    "EmptyInputError",
    "FrequencyTriple",
    "InfeasibleParametersError",
    "NoOptimalFrequencyError",
    "OfferMatrix",
    "OmegaTriple",
    "OutsideSimplexError",
    "ParamVector",
    "PreferenceOutcome",
    "SampleRecord",
    "SamplingExhaustedError",
    "SingularSystemError",
    "SvgOptions",
    "Tactic",
    "TacticMatrix",
    "TernaryPoint",
    "TransitivityLabel",
    "build_offer_matrix",
    "classify",
    "compute_omega",
    "coverage",
    "emit_csv",
    "emit_svg",
    "haar_sample",
    "is_optimal",
    "measurement_probabilities",
    "optimal_frequencies_from_tactic",
    "optimal_strategy_from_params",
    "params_feasible",
    "quadratic_free_coords",
    "read_csv_records",
    "run_experiment",
    "sample_optimal_strategy",
    "sample_param_vector",
    "sample_uniform_strategy",
    "solve_optimal_frequencies",
    "strategy_from_tactic",
    "tactic_matrix",
    "ternary_cell",
    "ternary_xy",
    "type1_preference",
    "type2_preference",
]
