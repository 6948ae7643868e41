"""Spin mapping class groups: twist words, quadratic forms, and generation certificates."""

from .homology import (
    HomologyClass,
    SymplecticMatrix,
    SymplecticMatrixF2,
    in_level2_kernel,
    intersection,
    mod2_reduce,
    square_transvection_matrix,
    transvect,
    transvection_matrix,
)
from .quadform import QuadraticForm, act_form, arf, box, eval_form, lambda_set, q0, q1, z2_transvection
from .spin import MembershipReport, is_extendable_k3_sum, is_spin_member, non_preserving_witness
from .words import TwistWord, curve_class, evaluate, evaluate_f2, gg_generators, parse_word

__all__ = [
    "HomologyClass", "SymplecticMatrix", "SymplecticMatrixF2", "in_level2_kernel", "intersection",
    "mod2_reduce", "square_transvection_matrix", "transvect", "transvection_matrix",
    "QuadraticForm", "act_form", "arf", "box", "eval_form", "lambda_set", "q0", "q1", "z2_transvection",
    "MembershipReport", "is_extendable_k3_sum", "is_spin_member", "non_preserving_witness",
    "TwistWord", "curve_class", "evaluate", "evaluate_f2", "gg_generators", "parse_word",
]
