"""Exact-arithmetic workbench for Z2-graded nonassociative algebras:
alternative / Malcev / pre-Malcev / pre-alternative superalgebras, their
representations and bimodules, super O-operators and Rota-Baxter operators,
and the super Malcev Yang-Baxter equation in tensor and operator form.
"""

from .graded import (
    DimensionMismatch,
    GradedLinearMap,
    GradedVector,
    ParityViolation,
    SuperSpace,
    Tensor2,
    Tensor3,
    direct_sum,
    koszul_sign,
    pair,
    pair_tensor,
    sigma,
)
from .algebras import (
    Superalgebra,
    ViolationReport,
    check_left_alternative,
    check_malcev,
    check_pre_alternative,
    check_pre_malcev,
    check_right_alternative,
    commutator_superalgebra,
    pre_malcev_from_pre_alternative,
    sum_pre_alternative,
)
from .reps import (
    Bimodule,
    Representation,
    adjoint_representation,
    are_equivalent,
    check_alternative_bimodule,
    check_malcev_representation,
    coadjoint_representation,
    dual_representation,
    left_multiplication_representation,
    regular_bimodule,
    rep_from_bimodule,
    semidirect_alternative,
    semidirect_malcev,
)
from .operators import (
    BilinearForm,
    FormFlags,
    IdentityViolation,
    check_o_operator_alternative,
    check_o_operator_malcev,
    check_rota_baxter,
    check_symplectic,
    classify_form,
    compatible_pre_malcev_from_invertible_oop,
    induced_structure_on_image,
    pre_alternative_from_o_operator,
    pre_malcev_from_invertible_rota_baxter,
    pre_malcev_from_o_operator,
    pre_malcev_from_rota_baxter,
    pre_malcev_from_symplectic,
    search_o_operators_alternative,
    search_o_operators_malcev,
    search_rota_baxter,
)
from .yangbaxter import (
    MybeCandidate,
    canonical_r,
    check_operator_form,
    mybe_lhs,
    pre_malcev_on_dual_from_r,
    r_as_map,
    r_from_o_operator,
    rb_from_invariant_form,
    symplectic_from_r,
)

__all__ = [
    "Bimodule",
    "BilinearForm",
    "FormFlags",
    "IdentityViolation",
    "MybeCandidate",
    "Representation",
    "adjoint_representation",
    "are_equivalent",
    "canonical_r",
    "check_alternative_bimodule",
    "check_malcev_representation",
    "check_o_operator_alternative",
    "check_o_operator_malcev",
    "check_operator_form",
    "check_rota_baxter",
    "check_symplectic",
    "classify_form",
    "coadjoint_representation",
    "compatible_pre_malcev_from_invertible_oop",
    "dual_representation",
    "induced_structure_on_image",
    "left_multiplication_representation",
    "mybe_lhs",
    "pre_alternative_from_o_operator",
    "pre_malcev_from_invertible_rota_baxter",
    "pre_malcev_from_o_operator",
    "pre_malcev_from_rota_baxter",
    "pre_malcev_from_symplectic",
    "pre_malcev_on_dual_from_r",
    "r_as_map",
    "r_from_o_operator",
    "rb_from_invariant_form",
    "regular_bimodule",
    "rep_from_bimodule",
    "search_o_operators_alternative",
    "search_o_operators_malcev",
    "search_rota_baxter",
    "semidirect_alternative",
    "semidirect_malcev",
    "symplectic_from_r",
    "DimensionMismatch",
    "GradedLinearMap",
    "GradedVector",
    "ParityViolation",
    "SuperSpace",
    "Superalgebra",
    "Tensor2",
    "Tensor3",
    "ViolationReport",
    "check_left_alternative",
    "check_malcev",
    "check_pre_alternative",
    "check_pre_malcev",
    "check_right_alternative",
    "commutator_superalgebra",
    "direct_sum",
    "koszul_sign",
    "pair",
    "pair_tensor",
    "pre_malcev_from_pre_alternative",
    "sigma",
    "sum_pre_alternative",
]
