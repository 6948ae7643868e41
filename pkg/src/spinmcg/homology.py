"""Integral and mod-2 homology of a closed genus-g surface.

Coordinates are ordered (x1, y1, x2, y2, ..., xg, yg) with (x_i, y_i) = +1.
Matrices act on column vectors.  Mod-2 classes are plain ints: bit 2(i-1)
holds the x_i coefficient and bit 2(i-1)+1 holds the y_i coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence


class GenusMismatchError(ValueError):
    pass


def _check_same(n1: int, n2: int) -> None:
    if n1 != n2:
        raise GenusMismatchError(f"dimension mismatch: {n1} vs {n2}")


@dataclass(frozen=True)
class HomologyClass:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) % 2 or not self.coeffs:
            raise ValueError("a homology class needs 2g coefficients, g >= 1")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, g: int) -> "HomologyClass":
        return cls((0,) * (2 * g))

    @classmethod
    def x(cls, i: int, g: int) -> "HomologyClass":
        return cls.basis(2 * (i - 1), g)

    @classmethod
    def y(cls, i: int, g: int) -> "HomologyClass":
        return cls.basis(2 * (i - 1) + 1, g)

    @classmethod
    def basis(cls, k: int, g: int) -> "HomologyClass":
        c = [0] * (2 * g)
        c[k] = 1
        return cls(tuple(c))

    @classmethod
    def from_mod2(cls, v: int, g: int) -> "HomologyClass":
        return cls(tuple((v >> k) & 1 for k in range(2 * g)))

    @property
    def genus(self) -> int:
        return len(self.coeffs) // 2

    @property
    def mod2(self) -> int:
        return sum(1 << k for k, c in enumerate(self.coeffs) if c % 2)

    def is_primitive(self) -> bool:
        return reduce(gcd, self.coeffs, 0) == 1

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        _check_same(len(self.coeffs), len(other.coeffs))
        return HomologyClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "HomologyClass":
        return HomologyClass(tuple(k * a for a in self.coeffs))

    def __str__(self) -> str:
        return format_class(self.coeffs)


def format_class(coeffs: Sequence[int]) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        name = f"{'xy'[k % 2]}{k // 2 + 1}"
        if c == 1:
            terms.append(("+", name))
        elif c == -1:
            terms.append(("-", name))
        else:
            terms.append(("+" if c > 0 else "-", f"{abs(c)}{name}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += sign + t
    return out


def intersection(u: HomologyClass, v: HomologyClass) -> int:
    _check_same(len(u.coeffs), len(v.coeffs))
    a, b = u.coeffs, v.coeffs
    return sum(a[k] * b[k + 1] - a[k + 1] * b[k] for k in range(0, len(a), 2))


def transvect(a: HomologyClass, v: HomologyClass) -> HomologyClass:
    """T_a(v) = v + (a, v) a."""
    return v + intersection(a, v) * a


def _pairing_row(a: Sequence[int]) -> list[int]:
    # row vector r with r . v = (a, v)
    r = [0] * len(a)
    for k in range(0, len(a), 2):
        r[k] = -a[k + 1]
        r[k + 1] = a[k]
    return r


@dataclass(frozen=True)
class SymplecticMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or n % 2 or any(len(r) != n for r in rows):
            raise ValueError("expected a square 2g x 2g matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        n = 2 * g
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def genus(self) -> int:
        return len(self.rows) // 2

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        _check_same(len(self.rows), len(other.rows))
        cols = list(zip(*other.rows))
        return SymplecticMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c) if a) for c in cols) for r in self.rows)
        )

    def __pow__(self, e: int) -> "SymplecticMatrix":
        base = self if e >= 0 else self.inverse()
        out = SymplecticMatrix.identity(self.genus)
        for _ in range(abs(e)):
            out = out @ base
        return out

    def apply(self, v: HomologyClass) -> HomologyClass:
        _check_same(len(self.rows), len(v.coeffs))
        return HomologyClass(tuple(sum(a * b for a, b in zip(r, v.coeffs)) for r in self.rows))

    __call__ = apply

    def transpose(self) -> "SymplecticMatrix":
        return SymplecticMatrix(tuple(zip(*self.rows)))

    def inverse(self) -> "SymplecticMatrix":
        """Inverse of a symplectic matrix (the result is meaningless otherwise)."""
        # M^-1 = J^-1 M^T J for symplectic M; J^-1 = -J.
        n = len(self.rows)
        t = list(zip(*self.rows))
        out = [[0] * n for _ in range(n)]
        # (J^-1 M^T J)[i][j]; J e_{2m+1} = e_{2m}, J e_{2m} = -e_{2m+1}
        for i in range(n):
            si, pi = (-1, i + 1) if i % 2 == 0 else (1, i - 1)  # row i of -J picks row pi of M^T
            for j in range(n):
                sj, pj = (-1, j + 1) if j % 2 == 0 else (1, j - 1)  # column j of J picks column pj
                out[i][j] = si * sj * t[pi][pj]
        return SymplecticMatrix(tuple(map(tuple, out)))

    def is_symplectic(self) -> bool:
        n = len(self.rows)
        cols = list(zip(*self.rows))
        for i in range(n):
            for j in range(i, n):
                want = 0
                if j == i + 1 and i % 2 == 0:
                    want = 1
                if intersection(HomologyClass(cols[i]), HomologyClass(cols[j])) != want:
                    return False
        return True

    def is_identity(self) -> bool:
        return all(x == int(i == j) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def mod2(self) -> "SymplecticMatrixF2":
        return mod2_reduce(self)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        w = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.rows)


def transvection_matrix(a: HomologyClass, power: int = 1) -> SymplecticMatrix:
    """Matrix of T_a^power, i.e. I + power * a a^T J."""
    r = _pairing_row(a.coeffs)
    n = len(r)
    return SymplecticMatrix(
        tuple(tuple(int(i == k) + power * a.coeffs[i] * r[k] for k in range(n)) for i in range(n))
    )


def square_transvection_matrix(a: HomologyClass) -> SymplecticMatrix:
    if not a.is_primitive():
        raise ValueError(f"square transvection needs a primitive class, got {a}")
    return transvection_matrix(a, 2)


def mod2_reduce(M: SymplecticMatrix) -> "SymplecticMatrixF2":
    return SymplecticMatrixF2(
        tuple(sum(1 << k for k, x in enumerate(r) if x % 2) for r in M.rows), len(M.rows) // 2
    )


def in_level2_kernel(M: SymplecticMatrix) -> bool:
    if not M.is_symplectic():
        raise ValueError("in_level2_kernel expects a symplectic matrix")
    return mod2_reduce(M).is_identity()


# ---------------------------------------------------------------- mod 2

_X_MASK = int("01" * 64, 2)


def f2_pairing(u: int, v: int) -> int:
    """Mod-2 intersection pairing of bitmask classes (g <= 64)."""
    m = _X_MASK
    ux, uy = u & m, (u >> 1) & m
    vx, vy = v & m, (v >> 1) & m
    return ((ux & vy) ^ (uy & vx)).bit_count() & 1


def f2_class(g: int, blocks: Iterable[tuple[int, int]]) -> int:
    """Bitmask from [(eps_1, delta_1), ...]; missing trailing blocks are zero."""
    v = 0
    for i, (e, d) in enumerate(blocks):
        if i >= g:
            raise ValueError("more blocks than the genus")
        v |= (e & 1) << (2 * i) | (d & 1) << (2 * i + 1)
    return v


def f2_blocks(v: int, g: int) -> list[tuple[int, int]]:
    return [((v >> 2 * i) & 1, (v >> 2 * i + 1) & 1) for i in range(g)]


def f2_str(v: int) -> str:
    if not v:
        return "0"
    return "+".join(f"{'xy'[k % 2]}{k // 2 + 1}" for k in range(v.bit_length()) if v >> k & 1)


def f2_parse(text: str, g: int) -> int:
    """Parse 'x1+y2' style sums (or '0') into a bitmask."""
    text = text.replace(" ", "")
    if text == "0":
        return 0
    v = 0
    for term in text.split("+"):
        if len(term) < 2 or term[0] not in "xy" or not term[1:].isdigit():
            raise ValueError(f"bad class term {term!r}")
        i = int(term[1:])
        if not 1 <= i <= g:
            raise ValueError(f"index {i} out of range for genus {g}")
        v ^= 1 << (2 * (i - 1) + (term[0] == "y"))
    return v


@dataclass(frozen=True)
class SymplecticMatrixF2:
    """Bit-packed matrix over F2: rows[i] has bit k set iff entry (i, k) is 1."""

    rows: tuple[int, ...]
    g: int

    def __post_init__(self):
        if len(self.rows) != 2 * self.g:
            raise ValueError("need 2g rows")

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrixF2":
        return cls(tuple(1 << i for i in range(2 * g)), g)

    @classmethod
    def from_columns(cls, cols: Sequence[int], g: int) -> "SymplecticMatrixF2":
        n = 2 * g
        return cls(tuple(sum(((cols[k] >> i) & 1) << k for k in range(n)) for i in range(n)), g)

    def columns(self) -> list[int]:
        n = 2 * self.g
        return [sum(((self.rows[i] >> k) & 1) << i for i in range(n)) for k in range(n)]

    def apply(self, v: int) -> int:
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & v).bit_count() & 1) << i
        return out

    __call__ = apply

    def __matmul__(self, other: "SymplecticMatrixF2") -> "SymplecticMatrixF2":
        if self.g != other.g:
            raise GenusMismatchError(f"genus mismatch: {self.g} vs {other.g}")
        rows = []
        for r in self.rows:
            acc = 0
            k = 0
            while r:
                if r & 1:
                    acc ^= other.rows[k]
                r >>= 1
                k += 1
            rows.append(acc)
        return SymplecticMatrixF2(tuple(rows), self.g)

    def is_identity(self) -> bool:
        return all(r == 1 << i for i, r in enumerate(self.rows))

    def preserves_pairing(self) -> bool:
        cols = self.columns()
        n = len(cols)
        for i in range(n):
            for j in range(i + 1, n):
                want = int(j == i + 1 and i % 2 == 0)
                if f2_pairing(cols[i], cols[j]) != want:
                    return False
        return True

    def packed(self) -> int:
        n = 2 * self.g
        out = 0
        for i, r in enumerate(self.rows):
            out |= r << (i * n)
        return out

    @classmethod
    def from_packed(cls, x: int, g: int) -> "SymplecticMatrixF2":
        n = 2 * g
        mask = (1 << n) - 1
        return cls(tuple((x >> (i * n)) & mask for i in range(n)), g)

    def to_list(self) -> list[list[int]]:
        n = 2 * self.g
        return [[(r >> k) & 1 for k in range(n)] for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.to_list())


def f2_transvection(z: int, g: int) -> SymplecticMatrixF2:
    """v -> v + (z, v) z over F2."""
    n = 2 * g
    return SymplecticMatrixF2.from_columns(
        [(1 << k) ^ (z if f2_pairing(z, 1 << k) else 0) for k in range(n)], g
    )
