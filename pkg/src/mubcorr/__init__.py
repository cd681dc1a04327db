"""Classical vs quantum mutual information under mutually unbiased bases.

Numerics for the CQC conjecture (two-basis classical mutual information is
bounded by the quantum mutual information) and its full-family extension
(ECQC) in prime dimensions: MUB construction, bipartite entropies,
measurement channels, sufficient conditions, the ladder of proven entropic
bounds, isotropic-state closed forms, and a seeded Monte-Carlo harness.
"""

from .conjectures import (
    BoundsReport,
    ConjectureReport,
    appcqc1_check,
    appecqc_check,
    bound_ladder,
    coles_piani_r,
    cqc_gap,
    ecqc_report,
    entanglement_witness,
    kappa1,
    kappa2,
    subset_min_mi_sum,
    sufficient_cqc,
    sufficient_ecqc,
)
from .harness import (
    ExperimentConfig,
    RunResult,
    TrialRecord,
    emit_plot,
    run,
    separable_filtered_sampler,
)
from .isotropic import (
    IsotropicPoint,
    iso_ecqc_gap,
    iso_eigenvalues,
    iso_joint_probs,
    iso_measured_mi,
    iso_mutual_information,
    isotropic_point,
)
from .linalg import (
    dagger,
    frobenius_norm,
    hermitian_eigenvalues,
    kron,
    matmul,
    partial_trace,
    partial_transpose,
    trace,
)
from .measure import (
    CqEnsemble,
    JointDistribution,
    classical_mi,
    joint_distribution,
    measure_one_side,
    one_sided_mi,
    shannon_entropy,
)
from .mubs import (
    Basis,
    MubSet,
    fourier,
    is_mutually_unbiased,
    is_prime,
    mub_family,
    overlap_matrix,
)
from .states import (
    BipartiteState,
    conditional_entropy,
    has_maximally_mixed_subsystem,
    is_ppt,
    is_separable_2x2,
    isotropic,
    isotropic_p_range,
    maximally_entangled,
    pure_state,
    purity,
    quantum_mutual_information,
    random_mixed,
    random_pure,
    subsystem_entropy,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BipartiteState",
    "BoundsReport",
    "ConjectureReport",
    "CqEnsemble",
    "ExperimentConfig",
    "IsotropicPoint",
    "JointDistribution",
    "MubSet",
    "RunResult",
    "TrialRecord",
    "appcqc1_check",
    "appecqc_check",
    "bound_ladder",
    "classical_mi",
    "coles_piani_r",
    "conditional_entropy",
    "cqc_gap",
    "dagger",
    "ecqc_report",
    "emit_plot",
    "entanglement_witness",
    "fourier",
    "frobenius_norm",
    "has_maximally_mixed_subsystem",
    "hermitian_eigenvalues",
    "is_mutually_unbiased",
    "is_ppt",
    "is_prime",
    "is_separable_2x2",
    "iso_ecqc_gap",
    "iso_eigenvalues",
    "iso_joint_probs",
    "iso_measured_mi",
    "iso_mutual_information",
    "isotropic",
    "isotropic_p_range",
    "isotropic_point",
    "joint_distribution",
    "kappa1",
    "kappa2",
    "kron",
    "matmul",
    "maximally_entangled",
    "measure_one_side",
    "mub_family",
    "one_sided_mi",
    "overlap_matrix",
    "partial_trace",
    "partial_transpose",
    "pure_state",
    "purity",
    "quantum_mutual_information",
    "random_mixed",
    "random_pure",
    "run",
    "separable_filtered_sampler",
    "shannon_entropy",
    "subset_min_mi_sum",
    "subsystem_entropy",
    "sufficient_cqc",
    "sufficient_ecqc",
    "trace",
    "von_neumann_entropy",
]
