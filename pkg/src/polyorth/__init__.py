"""Exact computations in finite-dimensional polyhedral normed spaces:
Birkhoff-James orthogonality, best approximation from subspaces, operator
norms and operator-to-subspace distances, with instance generators and
verification suites for the supporting structure theory.

All core arithmetic is exact rational; floats appear only in rendered figures.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .linalg import affine_rank, as_matrix, as_vector, frac
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LpResult, solve_lp
from .polytope import InvalidPolytope, SymmetricPolytope, enumerate_vertices, polar_dual
from .spaces import (
    NormedSpace,
    Subspace,
    SupportSet,
    dual_space,
    has_l1_property,
    is_l1_predual,
    make_space,
    norm,
    smoothness_order,
    space_from_facets,
    space_from_vertices,
    space_l1,
    space_linf,
    subspace,
    support_set,
)
from .proximity import (
    BestApproxResult,
    annihilator,
    bj_orthogonal_subspace,
    bj_orthogonal_vec,
    distance_to_subspace,
)
from .operators import (
    Operator,
    SupportPair,
    WitnessDecomposition,
    identity_operator,
    make_operator,
    norm_attainment_extremes,
    operator_norm,
    operator_smoothness_order,
    operator_subspace_basis,
    operator_support_extremes,
    orthogonality_witness,
    rank_one,
    zero_operator,
)
from .minimax import (
    Check,
    Instance,
    MinimaxReport,
    TransferResult,
    VerificationReport,
    distance_operator_subspace,
    local_sup,
    make_m_summand,
    minimax_report,
    proximinal_transfer,
    summand_factor_spaces,
    verify_generic,
    verify_prop1,
    verify_theorem,
)
from .oracle import (
    SampleConfig,
    bj_lambda_scan,
    estimate_operator_distance,
    sample_sphere,
)
from .generate import GenerationExhausted, generate_instance

__all__ = [
    "__version__",
    "frac", "as_vector", "as_matrix", "affine_rank",
    "solve_lp", "LpResult", "OPTIMAL", "INFEASIBLE", "UNBOUNDED",
    "SymmetricPolytope", "enumerate_vertices", "polar_dual", "InvalidPolytope",
    "NormedSpace", "Subspace", "SupportSet", "make_space", "space_l1", "space_linf",
    "space_from_facets", "space_from_vertices", "subspace",
    "norm", "dual_space", "support_set", "smoothness_order",
    "has_l1_property", "is_l1_predual",
    "BestApproxResult", "distance_to_subspace", "bj_orthogonal_vec",
    "bj_orthogonal_subspace", "annihilator",
    "Operator", "SupportPair", "WitnessDecomposition", "operator_norm",
    "make_operator", "zero_operator", "identity_operator",
    "norm_attainment_extremes", "operator_support_extremes",
    "operator_smoothness_order", "rank_one", "orthogonality_witness",
    "operator_subspace_basis",
    "Instance", "MinimaxReport", "VerificationReport", "Check", "TransferResult",
    "distance_operator_subspace", "local_sup", "minimax_report",
    "make_m_summand", "summand_factor_spaces",
    "verify_generic", "verify_prop1", "verify_theorem", "proximinal_transfer",
    "SampleConfig", "sample_sphere", "bj_lambda_scan", "estimate_operator_distance",
    "generate_instance", "GenerationExhausted",
]
