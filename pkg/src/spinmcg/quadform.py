"""Z2-quadratic forms on H1(surface; F2).

A form is stored by its basis values (q(x1), q(y1), ..., q(xg), q(yg)) packed
into an int with the same bit layout as mod-2 classes.  Values elsewhere
follow from q(u + v) = q(u) + q(v) + (u, v).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .homology import SymplecticMatrixF2, f2_pairing, f2_transvection, _X_MASK

DEFAULT_CAP = 8


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class QuadraticForm:
    g: int
    bits: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("genus must be >= 1")
        if self.bits >> (2 * self.g):
            raise ValueError("basis values exceed 2g bits")

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "QuadraticForm":
        if len(values) % 2 or not values or any(v not in (0, 1) for v in values):
            raise ValueError(f"expected 2g bits, got {list(values)}")
        return cls(len(values) // 2, sum(v << k for k, v in enumerate(values)))

    @classmethod
    def parse(cls, text: str) -> "QuadraticForm":
        """Parse the bracket form "[1,1,0,0]"."""
        m = re.fullmatch(r"\s*\[([01](?:\s*,\s*[01])*)\]\s*", text)
        if not m:
            raise ValueError(f"bad form text {text!r}; expected e.g. [1,1,0,0]")
        return cls.from_values([int(t) for t in m.group(1).split(",")])

    @property
    def values(self) -> list[int]:
        return [(self.bits >> k) & 1 for k in range(2 * self.g)]

    def __call__(self, v: int) -> int:
        return eval_form(self, v)

    def arf(self) -> int:
        return arf(self)

    def act(self, M: SymplecticMatrixF2) -> "QuadraticForm":
        return act_form(self, M)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.values)) + "]"


def q0(g: int) -> QuadraticForm:
    return QuadraticForm(g, 0)


def q1(g: int) -> QuadraticForm:
    return QuadraticForm(g, 0b11)


def named_form(name: str, g: int) -> QuadraticForm:
    """'q0', 'q1', or a bracket bit list."""
    if name == "q0":
        return q0(g)
    if name == "q1":
        return q1(g)
    q = QuadraticForm.parse(name)
    if q.g != g:
        raise ValueError(f"form {name} has genus {q.g}, expected {g}")
    return q


def _check_class(q: QuadraticForm, v: int) -> None:
    if v < 0 or v >> (2 * q.g):
        raise ValueError(f"class {v:#x} does not live in genus {q.g}")


def eval_form(q: QuadraticForm, v: int) -> int:
    _check_class(q, v)
    # every x_i, y_i pair contributes (x_i, y_i) = 1 when both are present
    return ((v & q.bits).bit_count() + (v & (v >> 1) & _X_MASK).bit_count()) & 1


def eval_form_ordered(q: QuadraticForm, v: int, order: Iterable[int]) -> int:
    """Evaluate by adding the basis summands of v one at a time in `order`."""
    _check_class(q, v)
    acc, val = 0, 0
    for k in order:
        if not (v >> k) & 1:
            continue
        e = 1 << k
        val ^= ((q.bits >> k) & 1) ^ f2_pairing(acc, e)
        acc |= e
    if acc != v:
        raise ValueError("order does not cover the support of v")
    return val


def arf(q: QuadraticForm) -> int:
    b = q.bits
    return (b & (b >> 1) & _X_MASK).bit_count() & 1


def act_form(q: QuadraticForm, M: SymplecticMatrixF2) -> QuadraticForm:
    """Right action (q.M)(v) = q(Mv)."""
    if M.g != q.g:
        raise ValueError(f"genus mismatch: form {q.g}, matrix {M.g}")
    if not M.preserves_pairing():
        raise ValueError("act_form needs a matrix preserving the mod-2 pairing")
    return QuadraticForm(q.g, sum(eval_form(q, c) << k for k, c in enumerate(M.columns())))


def z2_transvection(z: int, g: int) -> SymplecticMatrixF2:
    if z == 0:
        raise ValueError("Z2-transvection about the zero class")
    if z >> (2 * g):
        raise ValueError(f"class {z:#x} does not live in genus {g}")
    return f2_transvection(z, g)


def box(z1: int, z2: int, q: QuadraticForm) -> int:
    """z1 [] z2 = z1 + (z2, z1) z2, defined on the value-1 set of q."""
    for z in (z1, z2):
        if eval_form(q, z) != 1:
            raise ValueError(f"class {z:#x} is not in the value-1 set of {q}")
    return z1 ^ z2 if f2_pairing(z2, z1) else z1


def _check_cap(g: int, cap: int) -> None:
    if g > cap:
        raise CapExceededError(f"genus {g} exceeds the enumeration cap {cap}")


def lambda_set(q: QuadraticForm, cap: int = DEFAULT_CAP) -> list[int]:
    """All classes z with q(z) = 1, in increasing bitmask order."""
    _check_cap(q.g, cap)
    return [v for v in range(1, 1 << (2 * q.g)) if eval_form(q, v)]


def forms(g: int, arf_value: int | None = None, cap: int = DEFAULT_CAP) -> list[QuadraticForm]:
    _check_cap(g, cap)
    out = [QuadraticForm(g, b) for b in range(1 << (2 * g))]
    if arf_value is None:
        return out
    return [q for q in out if arf(q) == arf_value]


def all_orders(g: int) -> Iterable[tuple[int, ...]]:
    return itertools.permutations(range(2 * g))
