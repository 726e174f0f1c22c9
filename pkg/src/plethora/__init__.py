"""Exact plethystic exponentials of Hodge-Deligne polynomials, three ways."""

from .errors import PreconditionError, StateLimitError
from .exactalg import (
    BiPoly,
    Rational,
    TSeries,
    expand_product_of_powers,
    series_exp,
    series_log,
)
from .symfun import (
    Partition,
    SymFun,
    e_to_p,
    expand_in_variables,
    h_to_p,
    partitions_of,
    pleth_abstract,
    pleth_alphabet,
    pleth_concrete,
    pleth_schur_via_jt,
    s_to_p,
    z_of,
)
from .chromgraph import (
    SignedVar,
    SignedVarList,
    WeightedGraph,
    acyclic_orientations,
    chromatic_polynomial,
    coloring_sum_over,
    cs_coloring_sum,
    csf,
    csf_basis_matrix,
    csf_bruteforce,
    h_in_csf_basis,
    var_multiset,
)
from .hodge import (
    ABCPoly,
    GradedPoly,
    HodgeDiamond,
    abc_decompose,
    abc_sequences,
    birational_reduce,
    e_polynomial,
    elliptic_curve,
    expand_power_sums_two_vars,
    projective_line,
    projective_plane,
    r_generator,
    r_in_abc,
    scissor_sum,
    serre_dual_transform,
    serre_duality_power_sum_relation,
    two_var_power_sum_expand,
    validate_symmetries,
)
from .genfun import (
    CycleType,
    GeometricSeries,
    alpha_j,
    charvar_full_from_irr,
    charvar_irr_from_full,
    conf_ordered_epoly,
    equiv_config_epoly,
    mobius,
    ordered_sign_series,
    pe,
    pe_from_generator_decomposition,
    pe_product_formula,
    pe_via_coloring,
    pe_via_hn,
    pl,
    unordered_config_series,
    unordered_config_symmetrization,
)

__version__ = "0.1.0"
