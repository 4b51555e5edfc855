"""Operator realization of the algebraic Bethe ansatz for the five-vertex model."""

from .lops import (
    PYTHAGOREAN_UNIT_VECTORS,
    LocalLOperator,
    Site,
    bosonic_site,
    build_bosonic_L,
    build_four_vertex_L,
    build_L5v,
    build_L5v_second,
    build_Spm_L,
    five_vertex_delta,
    five_vertex_site,
    four_vertex_delta,
    phase_operators,
    second_branch_delta,
    six_vertex_L,
    spm_operators,
    spm_site,
    x_operator,
    y_operator,
)
from .monodromy import (
    M_MAX,
    DimensionCapError,
    Monodromy,
    VacuumEigenvalues,
    bracket,
    build_monodromy,
    matrix_element_Z,
    monodromy_from_sites,
    split_rapidities,
)
from .operators import SparseOperator
from .verify import (
    RELATION_NAMES,
    RMatrix,
    action_lemma_residual,
    build_R,
    commutation_residuals,
    cross_set_transpositions,
    f_fn,
    failing_relations,
    free_eigenvalue_bracket,
    g_fn,
    intertwining_residual,
    lmn_operator,
    verify_action_lemma,
    verify_commutation_16,
    verify_RLL,
    verify_RTT,
    verify_symmetry_proposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
