"""Exact spectral theory of the operator

    T = 1/2 * sum over a+b = p+q (all indices >= 1) of x_a x_b d/dx_p d/dx_q

on the polynomial algebra R[x_1, x_2, ...], graded by weighted degree
(deg x_k = k) and by length (len x_k = 1).  All arithmetic is exact; the
spectra are multisets of nonnegative integers and come with eigenfunctions,
an orthogonal eigenbasis, and several independent cross-checks.
"""

from .errors import ConsistencyError, SingularMatrixError
from .genfun import (
    GCombination,
    GIndex,
    GProduct,
    complete_symmetric,
    elementary_symmetric,
    expand_combination,
    expand_in_gbasis,
    expansion_matrix,
    g_poly,
    g_product_expand,
    g_value_is_zero,
    spanning_products,
)
from .partitions import (
    HookLeg,
    admissible_sequences,
    count_partitions,
    hook_leg_profile,
    is_admissible,
    partitions_with_length,
    profile_to_partition,
)
from .poly import (
    Bidegree,
    Monomial,
    Polynomial,
    apply_degree_operator,
    apply_length_operator,
    bidegree,
    inner_product,
    monomial,
    monomial_basis,
    partial_derivative,
    x,
)
from .spectral import (
    Eigenfunction,
    ExactMatrix,
    OrthogonalEigenfunction,
    SpectrumEntry,
    SpectrumReport,
    char_poly_check,
    dominant_eigenvalue,
    eigenbasis,
    has_zero_eigenvalue,
    orthogonal_eigenbasis,
    s_basis,
    sequence_eigenvalue,
    spectrum,
    t_matrix,
    verify_self_adjoint,
    verify_triangular,
)
from .transfer import alternating_identity_residual, apply_t, apply_t_structural, is_regular_pair, straighten_pair

__version__ = "0.1.0"

__all__ = [
    "Bidegree",
    "ConsistencyError",
    "Eigenfunction",
    "ExactMatrix",
    "GCombination",
    "GIndex",
    "GProduct",
    "HookLeg",
    "Monomial",
    "OrthogonalEigenfunction",
    "Polynomial",
    "SingularMatrixError",
    "SpectrumEntry",
    "SpectrumReport",
    "admissible_sequences",
    "alternating_identity_residual",
    "apply_degree_operator",
    "apply_length_operator",
    "apply_t",
    "apply_t_structural",
    "bidegree",
    "char_poly_check",
    "complete_symmetric",
    "count_partitions",
    "dominant_eigenvalue",
    "eigenbasis",
    "elementary_symmetric",
    "expand_combination",
    "expand_in_gbasis",
    "expansion_matrix",
    "g_poly",
    "g_product_expand",
    "g_value_is_zero",
    "has_zero_eigenvalue",
    "hook_leg_profile",
    "inner_product",
    "is_admissible",
    "is_regular_pair",
    "monomial",
    "monomial_basis",
    "orthogonal_eigenbasis",
    "partial_derivative",
    "partitions_with_length",
    "profile_to_partition",
    "s_basis",
    "sequence_eigenvalue",
    "spanning_products",
    "spectrum",
    "straighten_pair",
    "t_matrix",
    "verify_self_adjoint",
    "verify_triangular",
    "x",
]
