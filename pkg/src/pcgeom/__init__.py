"""Skew-symmetric pairwise-comparison matrices and their pair-subspace
geometry: consistency indices, wedge/coordinate machinery, the triad
coupling form, and inconsistency reduction."""

__version__ = "0.1.0"

from .coupling import (
    CouplingMap,
    CouplingMatrix,
    SpectralDiagnosis,
    build_M,
    coupling_coefficients,
    diagnose,
    quadratic_inconsistency,
    regularize,
)
from .embedding import (
    Embedding,
    GeometricDeviation,
    custom_embedding,
    geometric_deviation,
    geometric_inconsistency,
    orthogonal_embedding,
    pair_subspace,
    planar_embedding,
    planar_matrix_inconsistency,
    planar_pair_subspaces,
    scores_to_coefficients,
)
from .errors import (
    DegeneratePairWarning,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NonFiniteEntryError,
    NonIncreasingTriadError,
    NonPositiveEntryError,
    NonPositiveLambdaError,
    NonPositiveStepError,
    NonSquareError,
    NotReciprocalError,
    NotSkewSymmetricError,
    PCGeomError,
    TooSmallError,
    UnsupportedSizeError,
    ZeroCoefficientError,
    ZeroTwoVectorError,
)
from .exterior import (
    PluckerResidualSet,
    TwoVector,
    chordal_distance,
    is_decomposable,
    new_two_vector,
    normalize_grassmann,
    plucker_residuals,
    wedge,
)
from .pc_core import (
    DEFAULT_TOLERANCE,
    AdditiveMatrix,
    DeviationVector,
    MultiplicativeMatrix,
    ScoreVector,
    algebraic_inconsistency,
    all_triad_deviations,
    from_scores,
    is_consistent,
    new_additive,
    new_multiplicative,
    permute,
    recover_scores,
    to_additive,
    to_multiplicative,
    triad_deviation,
)
from .reduction import (
    ReductionStep,
    ReductionTrajectory,
    nearest_consistent_oracle,
    project_consistent,
    reduce_iterative,
)
from .twoform import (
    TwoForm,
    evaluate,
    evaluation_table,
    form_from_plucker,
    is_closed_discrete,
    matrix_form,
    standard_area_form,
)

__all__ = [
    "__version__",
    # matrices
    "AdditiveMatrix",
    "MultiplicativeMatrix",
    "ScoreVector",
    "DeviationVector",
    "DEFAULT_TOLERANCE",
    "new_additive",
    "new_multiplicative",
    "from_scores",
    "to_additive",
    "to_multiplicative",
    "triad_deviation",
    "all_triad_deviations",
    "algebraic_inconsistency",
    "is_consistent",
    "recover_scores",
    "permute",
    # exterior algebra
    "TwoVector",
    "PluckerResidualSet",
    "wedge",
    "new_two_vector",
    "plucker_residuals",
    "is_decomposable",
    "normalize_grassmann",
    "chordal_distance",
    # embeddings
    "Embedding",
    "GeometricDeviation",
    "orthogonal_embedding",
    "planar_embedding",
    "custom_embedding",
    "scores_to_coefficients",
    "pair_subspace",
    "geometric_deviation",
    "geometric_inconsistency",
    "planar_pair_subspaces",
    "planar_matrix_inconsistency",
    # coupling form
    "CouplingMap",
    "CouplingMatrix",
    "SpectralDiagnosis",
    "coupling_coefficients",
    "build_M",
    "quadratic_inconsistency",
    "diagnose",
    "regularize",
    # reduction
    "ReductionStep",
    "ReductionTrajectory",
    "project_consistent",
    "reduce_iterative",
    "nearest_consistent_oracle",
    # 2-forms
    "TwoForm",
    "form_from_plucker",
    "standard_area_form",
    "evaluate",
    "evaluation_table",
    "is_closed_discrete",
    "matrix_form",
    # errors
    "PCGeomError",
    "NonSquareError",
    "TooSmallError",
    "NotSkewSymmetricError",
    "NotReciprocalError",
    "NonFiniteEntryError",
    "NonPositiveEntryError",
    "IndexOutOfRangeError",
    "NonIncreasingTriadError",
    "DimensionMismatchError",
    "ZeroTwoVectorError",
    "ZeroCoefficientError",
    "NonPositiveLambdaError",
    "NonPositiveStepError",
    "UnsupportedSizeError",
    "DegeneratePairWarning",
]
