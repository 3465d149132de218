"""Two-level analog quantum search toolkit.

Builds the effective 2x2 Hermitian generator for driving a source state
toward a target state, evaluates its transition probability in closed
form, classifies the special coupling cases, inverts threshold-crossing
times, and integrates target-prior overlap statistics -- all cross-checked
against an independent brute-force propagator.
"""

from .baselines import farhi_gutmann_probability, grover_optimal_k, grover_probability
from .cases import (
    CaseLabel,
    OPTIMAL_CASES,
    case_p_max,
    case_t_star,
    classify,
    diagonal_speedup_condition,
    fenner_params,
    p_max_x_zero_limit,
    perturbative_p_max,
    perturbative_t_star,
)
from .dynamics import (
    NO_OSCILLATION,
    NoOscillation,
    ProbabilityCurve,
    SearchOutcome,
    TildeCoeffs,
    amplitude,
    curve_probabilities,
    p_max,
    p_max_unreduced,
    propagate_numeric,
    sample_curve,
    search_outcome,
    t_star,
    tilde_coeffs,
    transition_probability,
)
from .errors import (
    DegenerateOffDiagonalError,
    InvalidOverlapError,
    InvalidThresholdError,
    LabelMismatchError,
    NonFiniteError,
    NonHermitianError,
    NonPositiveScaleError,
    QSearchError,
    QuadratureFailureError,
    StepUnderflowError,
    ValidationError,
)
from .hamiltonian import (
    HamiltonianParams,
    MatrixRep,
    StateVec,
    matrix_rep,
    source_state,
    validate_overlap,
    validate_params,
)
from .overlap_prior import (
    PriorSpec,
    adaptive_quad,
    prob_overlap_at_least,
    target_density,
    uniform_prob_overlap,
)
from .spectral import (
    Spectrum,
    decompose,
    eigen_coeffs,
    eigenvalues,
    gap_parameter,
    reconstruction_residual,
)
from .threshold import (
    ComparisonReport,
    ThresholdResult,
    Winner,
    compare_speed,
    time_to_threshold,
)

__version__ = "0.1.0"
