"""Twist words: the generator alphabet, curve catalog, parser and evaluator.

A word is read with functional composition, so ``C1 C2`` applies C2 first and
evaluate(w1 w2) = evaluate(w1) @ evaluate(w2).

Symbols (k an integer index):

    C<k>   Dehn twist about c_k, 1 <= k <= 2g+1
    B<k>   twist about b_k, k = 2j with 2 <= j <= g-1;  B4' twist about b'_4
    X<k>   C_{k+1} C_k C_{k+1}^-1        Xs<k>  C_{k+1}^-1 C_k C_{k+1}    (4 <= k <= 2g)
    Y<k>   C_k B_k C_k^-1                Ys<k>  C_k^-1 B_k C_k            (k = 2j, 2 <= j <= g-1)
    D<k>   C_k^2                         DB<k>  B_k^2
    T1     B4 C5 C7 ... C_{2g+1}
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .homology import (
    HomologyClass,
    SymplecticMatrix,
    SymplecticMatrixF2,
    _pairing_row,
)

Factor = tuple[str, int]

_SYMBOL_RE = re.compile(r"(DB|Xs|Ys|C|B|X|Y|D|T)(\d+)(')?$")


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SymbolRangeError(ValueError):
    def __init__(self, symbol: str, message: str):
        super().__init__(f"{symbol}: {message}")
        self.symbol = symbol


def split_symbol(sym: str) -> tuple[str, int, bool]:
    m = _SYMBOL_RE.match(sym)
    if not m:
        raise SymbolRangeError(sym, "unknown generator name")
    kind, idx, prime = m.group(1), int(m.group(2)), bool(m.group(3))
    if prime and (kind, idx) != ("B", 4):
        raise SymbolRangeError(sym, "only B4' carries a prime")
    return kind, idx, prime


def _b_range(g: int) -> range:
    return range(4, 2 * g - 1, 2)


def check_symbol(sym: str, g: int) -> None:
    """Raise SymbolRangeError unless `sym` names a generator at genus g."""
    kind, k, prime = split_symbol(sym)
    if kind in ("C", "D"):
        ok = 1 <= k <= 2 * g + 1
        limit = f"1..{2 * g + 1}"
    elif kind in ("X", "Xs"):
        ok = 4 <= k <= 2 * g
        limit = f"4..{2 * g}"
    elif kind == "T":
        ok = k == 1 and g >= 3
        limit = "T1 only, g >= 3"
    else:  # B, Y, Ys, DB
        ok = k in _b_range(g)
        limit = f"even 4..{2 * g - 2}" if g >= 3 else "none at this genus"
    if not ok:
        raise SymbolRangeError(sym, f"index out of range for genus {g} (allowed: {limit})")


# ------------------------------------------------------------------ words

@dataclass(frozen=True)
class TwistWord:
    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((s, int(e)) for s, e in self.factors))

    @classmethod
    def of(cls, *symbols: str) -> "TwistWord":
        return cls(tuple((s, 1) for s in symbols))

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.factors + other.factors)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple((s, -e) for s, e in reversed(self.factors)))

    def __pow__(self, n: int) -> "TwistWord":
        base = self if n >= 0 else self.inverse()
        return TwistWord(base.factors * abs(n))

    def conj(self, other: "TwistWord") -> "TwistWord":
        """self * other, i.e. self other self^-1."""
        return self * other * self.inverse()

    def __len__(self) -> int:
        return len(self.factors)

    def normalized(self) -> "TwistWord":
        out: list[list] = []
        for s, e in self.factors:
            if out and out[-1][0] == s:
                out[-1][1] += e
                if out[-1][1] == 0:
                    out.pop()
            elif e:
                out.append([s, e])
        return TwistWord(tuple((s, e) for s, e in out))

    def symbols(self) -> set[str]:
        return {s for s, _ in self.factors}

    def __str__(self) -> str:
        return format_word(self)


def format_word(w: TwistWord) -> str:
    parts = [s if e == 1 else f"{s}^{e}" for s, e in w.normalized().factors]
    return " ".join(parts) if parts else "1"


_TOKEN_RE = re.compile(r"\s*(?:(\()|(\))|([A-Za-z]+\d+'?)|(1)(?![0-9]))")
_EXP_RE = re.compile(r"\^(-?\d+)")


def parse_word(text: str, g: int | None = None) -> TwistWord:
    """Parse the word grammar; with g given, indices are range-checked."""
    pos = 0
    stack: list[list[Factor]] = [[]]
    opens: list[int] = []

    def exponent() -> int:
        nonlocal pos
        m = _EXP_RE.match(text, pos)
        if not m:
            return 1
        pos = m.end()
        e = int(m.group(1))
        if e == 0:
            raise WordSyntaxError("zero exponent", m.start())
        return e

    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        pos = m.end()
        if m.group(1):
            opens.append(start)
            stack.append([])
        elif m.group(2):
            if not opens:
                raise WordSyntaxError("unbalanced ')'", start)
            opens.pop()
            inner = TwistWord(tuple(stack.pop())) ** exponent()
            stack[-1].extend(inner.factors)
        elif m.group(3):
            sym = m.group(3)
            try:
                if g is None:
                    split_symbol(sym)
                else:
                    check_symbol(sym, g)
            except SymbolRangeError as err:
                err.position = start
                raise
            stack[-1].append((sym, exponent()))
        else:
            if _EXP_RE.match(text, pos):
                exponent()
        if m.group(1):
            continue
        if pos < len(text) and not text[pos].isspace() and text[pos] != ")":
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
    if opens:
        raise WordSyntaxError("unclosed '('", opens[-1])
    return TwistWord(tuple(stack[0]))


WordLike = Union[str, TwistWord]


def as_word(w: WordLike, g: int | None = None) -> TwistWord:
    if isinstance(w, TwistWord):
        if g is not None:
            for s in w.symbols():
                check_symbol(s, g)
        return w
    return parse_word(w, g)


# ---------------------------------------------------------------- expansion

def _prim(sym: str, e: int = 1) -> list[Factor]:
    return [(sym, e)]


def _symbol_expansion(sym: str, g: int) -> list[Factor]:
    """Primitive (C, B, B4') expansion of a symbol with exponent +1."""
    kind, k, prime = split_symbol(sym)
    if kind in ("C", "B"):
        return _prim(sym)
    if kind == "X":
        return [(f"C{k + 1}", 1), (f"C{k}", 1), (f"C{k + 1}", -1)]
    if kind == "Xs":
        return [(f"C{k + 1}", -1), (f"C{k}", 1), (f"C{k + 1}", 1)]
    if kind == "Y":
        return [(f"C{k}", 1), (f"B{k}", 1), (f"C{k}", -1)]
    if kind == "Ys":
        return [(f"C{k}", -1), (f"B{k}", 1), (f"C{k}", 1)]
    if kind == "D":
        return [(f"C{k}", 2)]
    if kind == "DB":
        return [(f"B{k}", 2)]
    # T1
    return [("B4", 1)] + [(f"C{i}", 1) for i in range(5, 2 * g + 2, 2)]


def expand(w: WordLike, g: int) -> TwistWord:
    """Rewrite derived names into C/B/B4' letters (deterministic)."""
    w = as_word(w, g)
    out: list[Factor] = []
    for sym, e in w.factors:
        kind = split_symbol(sym)[0]
        if kind in ("C", "B"):
            out.append((sym, e))
            continue
        base = TwistWord(tuple(_symbol_expansion(sym, g)))
        out.extend((base ** e).factors)
    return TwistWord(tuple(out))


# ------------------------------------------------------------------ catalog

def curve_names(g: int) -> list[str]:
    names = [f"c{i}" for i in range(1, 2 * g + 2)]
    names += [f"b{k}" for k in _b_range(g)]
    if g >= 3:
        names += ["b4'", "c_beta"]
    return names


@lru_cache(maxsize=None)
def _base_catalog(g: int) -> dict[str, HomologyClass]:
    X = lambda i: HomologyClass.x(i, g)  # noqa: E731
    Y = lambda i: HomologyClass.y(i, g)  # noqa: E731
    cat = {"c1": -X(1)}
    for k in range(1, g + 1):
        cat[f"c{2 * k}"] = -Y(k)
    for i in range(1, g):
        cat[f"c{2 * i + 1}"] = X(i) + X(i + 1)
    cat[f"c{2 * g + 1}"] = X(g)
    for k in _b_range(g):
        cat[f"b{k}"] = X(k // 2)
    return cat


@lru_cache(maxsize=None)
def _catalog(g: int) -> dict[str, HomologyClass]:
    cat = dict(_base_catalog(g))
    if g >= 3:
        w = parse_word("C4 C3 C2 C1 C1 C2 C3 C4", g)
        cat["b4'"] = evaluate(w, g).apply(cat["b4"])
        # no homology class is fixed for c_beta; it sits in the b4 position.
        cat["c_beta"] = cat["b4"]
    return cat


def curve_class(name: str, g: int) -> HomologyClass:
    if g < 1:
        raise ValueError("genus must be >= 1")
    cat = _catalog(g)
    key = {"cbeta": "c_beta", "c_β": "c_beta"}.get(name, name)
    if key not in cat:
        raise KeyError(f"unknown curve {name!r} at genus {g} (known: {', '.join(curve_names(g))})")
    return cat[key]


def _symbol_curve(sym: str) -> str:
    return sym[0].lower() + sym[1:]


# --------------------------------------------------------------- evaluation

@lru_cache(maxsize=None)
def _curve_data(sym: str, g: int):
    name = _symbol_curve(sym)
    base = _base_catalog(g)
    a = (base[name] if name in base else curve_class(name, g)).coeffs
    r = _pairing_row(a)
    a_sparse = tuple((k, c) for k, c in enumerate(a) if c)
    r_sparse = tuple((k, c) for k, c in enumerate(r) if c)
    a2 = sum(1 << k for k, c in enumerate(a) if c % 2)
    r2 = sum(1 << k for k, c in enumerate(r) if c % 2)
    return a_sparse, r_sparse, a2, r2


def evaluate(w: WordLike, g: int) -> SymplecticMatrix:
    """Phi(w) in Sp(2g, Z)."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    w = expand(w, g)
    n = 2 * g
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for sym, e in w.factors:
        a_sp, r_sp, _, _ = _curve_data(sym, g)
        # M <- M (I + e a r)
        for row in M:
            t = sum(row[k] * c for k, c in a_sp)
            if t:
                t *= e
                for k, c in r_sp:
                    row[k] += t * c
    return SymplecticMatrix(tuple(map(tuple, M)))


def evaluate_f2(w: WordLike, g: int) -> SymplecticMatrixF2:
    """Phi_2(w) in Sp(2g, F2), computed directly on bit rows."""
    w = expand(w, g)
    rows = [1 << i for i in range(2 * g)]
    for sym, e in w.factors:
        if e % 2 == 0:
            continue
        _, _, a2, r2 = _curve_data(sym, g)
        for i, row in enumerate(rows):
            if (row & a2).bit_count() & 1:
                rows[i] = row ^ r2
    return SymplecticMatrixF2(tuple(rows), g)


# ---------------------------------------------------------------- generators

def gg_generator_names(g: int) -> list[str]:
    if g < 2:
        raise ValueError("the generator catalog needs g >= 2")
    names = ["C1", "C2", "C3"] + [f"X{i}" for i in range(4, 2 * g + 1)]
    names += [f"Y{k}" for k in _b_range(g)]
    names += [f"D{k}" for k in range(1, 2 * g + 2)]
    names += [f"DB{k}" for k in _b_range(g)]
    if g >= 3:
        names.append("T1")
    return names


def gg_generators(g: int) -> list[TwistWord]:
    return [TwistWord.of(s) for s in gg_generator_names(g)]


def mcg_generator_names(g: int) -> list[str]:
    """C_1..C_{2g+1} together with the B_{2j}."""
    return [f"C{i}" for i in range(1, 2 * g + 2)] + [f"B{k}" for k in _b_range(g)]


GG_KINDS = {"C", "X", "Xs", "Y", "Ys", "D", "DB", "T"}


def is_gg_symbol(sym: str, g: int) -> bool:
    """True if `sym` is a G_g generator or one of the derived names built from them."""
    try:
        check_symbol(sym, g)
    except SymbolRangeError:
        return False
    kind, k, _ = split_symbol(sym)
    if kind == "C":
        return k <= 3
    return kind in GG_KINDS


def words_from(items: Iterable[WordLike], g: int) -> list[TwistWord]:
    return [as_word(w, g) for w in items]
