"""Membership in the spin mapping class group Spin(g, q).

A mapping class lies in Spin(g, q) exactly when its mod-2 homology action
preserves q, so the test below is exact.  Extendability over
(CP^2, K3 # surface) is a cited criterion: it is equivalent to membership in
Spin(g, q1), and the functions here only compute the homological side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .homology import SymplecticMatrixF2, f2_str
from .quadform import QuadraticForm, act_form, eval_form, q1, z2_transvection
from .words import WordLike, evaluate_f2

EXTENDABILITY_BASIS = (
    "cited criterion: a class extends over (CP2, K3 # genus-(g-1) surface) "
    "iff it preserves the Rokhlin form, which equals q1"
)


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    image: SymplecticMatrixF2
    failing_class: Optional[int] = None

    def to_json(self) -> dict:
        out = {"member": self.member, "image": self.image.to_list()}
        if self.failing_class is not None:
            out["failing_class"] = f2_str(self.failing_class)
        return out


def membership_of_matrix(M: SymplecticMatrixF2, q: QuadraticForm) -> MembershipReport:
    if act_form(q, M) == q:
        return MembershipReport(True, M)
    for v in range(1, 1 << (2 * q.g)):
        if eval_form(q, M.apply(v)) != eval_form(q, v):
            return MembershipReport(False, M, v)
    raise AssertionError("form changed but no class detects it")


def is_spin_member(w: WordLike, q: QuadraticForm, g: int) -> MembershipReport:
    if q.g != g:
        raise ValueError(f"form has genus {q.g}, word evaluated at genus {g}")
    return membership_of_matrix(evaluate_f2(w, g), q)


def is_extendable_k3_sum(w: WordLike, g: int) -> bool:
    if g < 2:
        raise ValueError("the K3 connected-sum family starts at g = 2")
    return is_spin_member(w, q1(g), g).member


@dataclass(frozen=True)
class Witness:
    z: int
    matrix: SymplecticMatrixF2


def non_preserving_witness(q: QuadraticForm) -> Optional[Witness]:
    """Least nonzero z (bitmask order, x1 lowest) with q(z) = 0, with T_z.

    T_z then moves q, showing the stabilizer of q is a proper subgroup.
    Returns None for the odd genus-1 form, whose only zero is 0.
    """
    for z in range(1, 1 << (2 * q.g)):
        if eval_form(q, z) == 0:
            M = z2_transvection(z, q.g)
            assert act_form(q, M) != q
            return Witness(z, M)
    return None
