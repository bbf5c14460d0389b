"""Kazhdan-Lusztig and generalized Gelfand-Tsetlin bases of Specht modules, in exact arithmetic."""

from .cellmodule import CellModule, act_permutation, build_cell_module, character, isotypic_projector
from .gt import (
    BasisFamily,
    TransitionMatrix,
    generalized_gt_basis,
    jucys_murphy_matrix,
    normalize_and_transition,
    standard_gt_basis,
    verify_gt_types,
)
from .kl import KLTable, kl_polynomial, left_cell, mu
from .perms import (
    Interval,
    ParabolicChain,
    bruhat_leq,
    chain_from_bits,
    chain_permutation,
    longest_element,
    reduced_word,
)
from .tableaux import (
    Tableau,
    append_max,
    delete_max,
    descent_set,
    enumerate_syt,
    evacuate,
    leq,
    phi,
    row_index,
    rsk,
    rsk_inverse,
    sigma_special,
    word_complement,
    word_truncate,
)
from .verify import (
    VerificationReport,
    Workspace,
    run_suite,
    summarize,
    verify_case2_structures,
    verify_main_theorem,
    verify_mbs,
    verify_restriction,
)

__version__ = "0.1.0"
