"""Exact linear algebra over totally ordered idempotent semifields."""
from .cover import CoverElement, cover_add, cover_mul, is_ghost_or_zero, lift
from .errors import *  # noqa: F401,F403
from .matrix import (
    DetReport, Matrix, Permutation, det, det_report, det_value_fast, dominates_monomial,
    is_monomial, mat_add, mat_mul, mat_vec, monomial_inverse, transpose,
)
from .oracles import SearchBudget, oracle_definitional_singular, oracle_gm_dependent, oracle_roots
from .polynomials import UnivariatePoly, eval_cover, is_root, roots
from .rank import (
    FamilyReport, LinearForm, complete_to_tropical_basis, is_regular_family, kernel_generators,
    kernel_membership, rank_theorem_check, span_membership, tker_dimension, tker_membership,
    tropical_dimension, tropical_rank, weak_span_separation,
)
from .semifield import (
    BOOLEAN, MAXPLUS, MINPLUS, ZERO, F1, MaxPlus, MinPlus, Semifield, Value, frobenius_check,
    get_semifield, natural_leq, ordered_group_semifield, quasi_opposite, sf_add, sf_inv, sf_mul,
)
from .singularity import (
    SingularityReport, classify, is_D_singular, is_d_singular, is_definitionally_singular,
    is_gm_dependent, singular_witness,
)
from .tables import FiniteSemiringTable, characteristic, is_pure_characteristic

__version__ = "0.1.0"
