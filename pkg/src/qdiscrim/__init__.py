"""Optimal measurements for non-orthogonal quantum signal sets.

The package computes information-optimal projective measurements and
unambiguous-state-discrimination POVMs for linearly independent signal
states, quantifies the average information gain of each strategy, and
compares individual against collective (joint, including entangled-basis)
measurements.
"""

from .collective import (
    StrategyComparison,
    SuperpositionBoundResult,
    compare_strategies,
    so2_brute_force,
    superposition_bound_check,
)
from .errors import (
    BadPriorsError,
    DimensionMismatchError,
    DimensionOverflowError,
    InvalidPermutationError,
    LinearlyDependentError,
    NonSquareError,
    NonUniformPriorsError,
    NotNormalizedError,
    NotSquareError,
    NumericalFailureError,
    QDiscrimError,
    RankDeficientError,
    ThetaOutOfRangeError,
    ValidationError,
)
from .infogain import (
    EntropyProbeResult,
    GainReport,
    average_final_entropy,
    entropy_extrema_probe,
    info_gain_usd,
    info_gain_von_neumann,
    initial_entropy,
    outcome_probabilities,
    posterior_matrix,
)
from .linalg import SVDFactors, hadamard, kron, permute_columns, pseudo_inverse, svd
from .signals import SignalSet, collective_lift, from_columns, from_json, load_json, two_signal_set
from .usd import USDPovm, reciprocal_states, usd_povm
from .vonneumann import (
    MeasurementBasis,
    SinkhornResult,
    is_doubly_stochastic,
    optimal_von_neumann,
    pretty_good_measurement,
    probability_matrix,
    sinkhorn_scale,
)

__version__ = "0.1.0"

__all__ = [
    "BadPriorsError",
    "DimensionMismatchError",
    "DimensionOverflowError",
    "EntropyProbeResult",
    "GainReport",
    "InvalidPermutationError",
    "LinearlyDependentError",
    "MeasurementBasis",
    "NonSquareError",
    "NonUniformPriorsError",
    "NotNormalizedError",
    "NotSquareError",
    "NumericalFailureError",
    "QDiscrimError",
    "RankDeficientError",
    "SVDFactors",
    "SignalSet",
    "SinkhornResult",
    "StrategyComparison",
    "SuperpositionBoundResult",
    "ThetaOutOfRangeError",
    "USDPovm",
    "ValidationError",
    "average_final_entropy",
    "collective_lift",
    "compare_strategies",
    "entropy_extrema_probe",
    "from_columns",
    "from_json",
    "hadamard",
    "info_gain_usd",
    "info_gain_von_neumann",
    "initial_entropy",
    "is_doubly_stochastic",
    "kron",
    "load_json",
    "optimal_von_neumann",
    "outcome_probabilities",
    "permute_columns",
    "posterior_matrix",
    "pretty_good_measurement",
    "probability_matrix",
    "pseudo_inverse",
    "reciprocal_states",
    "sinkhorn_scale",
    "so2_brute_force",
    "superposition_bound_check",
    "svd",
    "two_signal_set",
    "usd_povm",
]
