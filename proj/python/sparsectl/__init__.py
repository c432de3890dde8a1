"""Output controllability of discrete-time LTI systems under per-step sparse inputs.

The heavy lifting lives in the compiled extension ``sparsectl._core``; this
package re-exports its surface.
"""

from ._core import (
    BudgetExceededError,
    ControllabilityReport,
    Corollary1Check,
    Corollary2Check,
    DesignProblem,
    DesignSolution,
    KalmanForm,
    LinearSystem,
    NecessaryCheck,
    NumericalInconsistencyError,
    OracleStatus,
    OracleVerdict,
    PbhCheck,
    RankProfile,
    Rational,
    SparseInputSequence,
    SparsityInterval,
    SufficientCheck,
    TheoremCCheck,
    TolerancePolicy,
    Trajectory,
    __version__,
    brute_force_check,
    check_output_controllable,
    controllability_matrix,
    corollary1_check,
    corollary2_check,
    default_horizon,
    design_sparse_inputs,
    full_report,
    kalman_decompose,
    least_squares_solve,
    load_system,
    minimum_sparsity_interval,
    necessary_conditions,
    numerical_rank,
    orthonormal_complement,
    orthonormal_range_basis,
    pbh_state_sparse,
    pseudo_inverse,
    rank_profile,
    simulate,
    sparsity_of,
    stacked_design_matrix,
    sufficient_conditions,
    system_to_json,
    theoremC_necessary,
    validate,
    verify_design,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
