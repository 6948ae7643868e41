"""Rewriting odd subchain maps of the straight chain into G_g.

An odd subchain map [i_1, ..., i_{r+1}] is stored as a tack sequence: bit
k-1 of `mask` is set when k is one of the indices (k = 1..2g+2).

Conjugation u*s means u s u^-1; for a word u the rightmost letter acts first.
Single-letter conjugations follow the licensed rules:

* C_j commutes with s when j, j+1 are both in s or both out of it;
* C_j^-1 * s replaces j by j+1 when j is in s and j+1 is not;
* C_j * s replaces j+1 by j when j+1 is in s and j is not;
* B_4 commutes with s when tacks 1..4 are all 0 or all 1.

Everything else is unlicensed and raises.  Longer moves (X_m, X*_m, T_1)
are replayed letter by letter.

Certificates are trees.  A node stands for the subchain map with its
`tacks`.  Soundness rests on two checks: each move replays through the rules
above, and the flattened word maps to the identity of Sp(2g, Z).  The second
check is only a necessary condition, since the Torelli group is exactly the
kernel of that representation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, Union

from .homology import SymplecticMatrix
from .words import (
    TwistWord,
    WordLike,
    as_word,
    evaluate,
    expand,
    is_gg_symbol,
    parse_word,
    split_symbol,
)


class UnlicensedMoveError(ValueError):
    pass


class FactorizationError(RuntimeError):
    pass


# ------------------------------------------------------------ tack sequences

@dataclass(frozen=True, order=True)
class TackSequence:
    g: int
    mask: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("genus must be >= 1")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"tacks exceed {self.n} positions")

    @property
    def n(self) -> int:
        return 2 * self.g + 2

    @classmethod
    def from_indices(cls, indices: Sequence[int], g: int) -> "TackSequence":
        idx = list(indices)
        if idx != sorted(set(idx)):
            raise ValueError(f"indices must be strictly increasing: {idx}")
        if idx and not (1 <= idx[0] and idx[-1] <= 2 * g + 2):
            raise ValueError(f"indices must lie in 1..{2 * g + 2}")
        return cls(g, sum(1 << (k - 1) for k in idx))

    @classmethod
    def parse(cls, text: str, g: Optional[int] = None) -> "TackSequence":
        """'11110000', '[[1,1,1,1,0,0,0,0]]' or '[1,2,3,4]' (the last needs g)."""
        t = text.strip()
        if t.startswith("[["):
            bits = [int(x) for x in t.strip("[]").split(",")]
            return cls.from_bits(bits)
        if t.startswith("["):
            if g is None:
                raise ValueError("index notation needs a genus")
            body = t.strip("[]").strip()
            return cls.from_indices([int(x) for x in body.split(",")] if body else [], g)
        if t and set(t) <= {"0", "1"}:
            return cls.from_bits([int(c) for c in t])
        raise ValueError(f"cannot parse tack sequence {text!r}")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "TackSequence":
        if len(bits) % 2 or len(bits) < 4 or any(b not in (0, 1) for b in bits):
            raise ValueError(f"expected 2g+2 bits, got {list(bits)}")
        return cls(len(bits) // 2 - 1, sum(b << k for k, b in enumerate(bits)))

    def __contains__(self, k: int) -> bool:
        return 1 <= k <= self.n and bool((self.mask >> (k - 1)) & 1)

    @property
    def bits(self) -> list[int]:
        return [(self.mask >> k) & 1 for k in range(self.n)]

    @property
    def indices(self) -> list[int]:
        return [k + 1 for k in range(self.n) if (self.mask >> k) & 1]

    @property
    def length(self) -> int:
        return self.mask.bit_count()

    def is_valid_map(self) -> bool:
        return self.length >= 2 and self.length % 2 == 0

    def stats(self) -> tuple[int, int, int]:
        """(h, b, t): 1-tacks among 1..3, solid block from 4, remaining 1-tacks."""
        bits = self.bits
        h = sum(bits[:3])
        b = 0
        while 3 + b < self.n and bits[3 + b]:
            b += 1
        return h, b, self.length - h - b

    def complement(self) -> "TackSequence":
        return TackSequence(self.g, ((1 << self.n) - 1) ^ self.mask)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def bracket(self) -> str:
        return "[" + ",".join(map(str, self.indices)) + "]"


TackLike = Union[TackSequence, str]


def as_tacks(s: TackLike, g: Optional[int] = None) -> TackSequence:
    if isinstance(s, TackSequence):
        return s
    t = TackSequence.parse(s, g)
    if g is not None and t.g != g:
        raise ValueError(f"tack sequence has genus {t.g}, expected {g}")
    return t


# ------------------------------------------------------------ oracle

COMMUTES = "commutes"
UNLICENSED = "unlicensed"


def conjugation_oracle(j: int, sign: int, s: TackSequence):
    """C_j^sign * s: a new TackSequence, COMMUTES, or UNLICENSED."""
    if not 1 <= j <= 2 * s.g + 1:
        raise ValueError(f"C{j} is not a chain index at genus {s.g}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a, b = j in s, (j + 1) in s
    if a == b:
        return COMMUTES
    lo, hi = 1 << (j - 1), 1 << j
    if sign == -1 and a:
        return TackSequence(s.g, s.mask ^ lo ^ hi)
    if sign == 1 and b:
        return TackSequence(s.g, s.mask ^ lo ^ hi)
    return UNLICENSED


def b4_oracle(s: TackSequence):
    head = s.mask & 0b1111
    return COMMUTES if head in (0, 0b1111) else UNLICENSED


@dataclass(frozen=True)
class OracleStep:
    letter: str
    sign: int
    before: TackSequence
    after: TackSequence
    verdict: str  # "moved" or "commutes"


def replay(word: WordLike, s: TackSequence) -> tuple[TackSequence, list[OracleStep]]:
    """Apply word* to s one primitive letter at a time, rightmost first."""
    w = expand(as_word(word, s.g), s.g)
    steps: list[OracleStep] = []
    cur = s
    for sym, e in reversed(w.factors):
        kind, k, prime = split_symbol(sym)
        sign = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if kind == "C":
                r = conjugation_oracle(k, sign, cur)
            elif kind == "B" and k == 4 and not prime:
                r = b4_oracle(cur)
            else:
                raise UnlicensedMoveError(f"no conjugation rule for {sym} on {cur}")
            if r == UNLICENSED:
                raise UnlicensedMoveError(f"{sym}^{sign} on {cur} is not licensed")
            nxt = cur if r == COMMUTES else r
            steps.append(OracleStep(sym, sign, cur, nxt, "commutes" if r == COMMUTES else "moved"))
            cur = nxt
    return cur, steps


@lru_cache(maxsize=None)
def _letters(word: str, g: int) -> tuple[tuple[str, int, int], ...]:
    """Primitive letters of a word, rightmost first, one entry per unit exponent."""
    out = []
    for sym, e in reversed(expand(parse_word(word, g), g).factors):
        kind, k, prime = split_symbol(sym)
        if kind == "B" and (k != 4 or prime):
            kind = "?"
        out += [(kind, k, 1 if e > 0 else -1)] * abs(e)
    return tuple(out)


@lru_cache(maxsize=None)
def _replay_cached(word: str, g: int, mask: int) -> Optional[int]:
    """Fast path of replay() for search; None when some letter is unlicensed."""
    for kind, k, sign in _letters(word, g):
        if kind == "C":
            a, b = (mask >> (k - 1)) & 1, (mask >> k) & 1
            if a == b:
                continue
            if (sign == -1 and a) or (sign == 1 and b):
                mask ^= 3 << (k - 1)
            else:
                return None
        elif kind == "B":
            if mask & 0b1111 not in (0, 0b1111):
                return None
        else:
            return None
    return mask


def act(word: WordLike, s: TackSequence) -> TackSequence:
    return replay(word, s)[0]


def try_act(word: str, s: TackSequence) -> Optional[TackSequence]:
    """word*s, or None when the replay hits an unlicensed letter."""
    r = _replay_cached(word, s.g, s.mask)
    return None if r is None else TackSequence(s.g, r)


def reachable(a: TackSequence, b: TackSequence, words: Sequence[str], max_steps: int) -> bool:
    """Whether some nonempty sequence of at most max_steps moves carries a to b."""
    frontier, seen = {a.mask}, set()
    for _ in range(max_steps):
        nxt = set()
        for m in frontier:
            for w in words:
                r = _replay_cached(w, a.g, m)
                if r is None:
                    continue
                if r == b.mask:
                    return True
                if r not in seen:
                    seen.add(r)
                    nxt.add(r)
        frontier = nxt
    return False


# ------------------------------------------------------------ named moves

def _move_word(rule: str, s: TackSequence, position: Optional[int], sign: int) -> str:
    g = s.g
    if rule in ("commute", "shift-b", "shift-c", "c123"):
        if position is None:
            raise ValueError(f"{rule} needs a position")
        if rule == "c123" and position not in (1, 2, 3):
            raise ValueError("c123 acts by C1, C2 or C3")
        sgn = {"shift-b": -1, "shift-c": 1}.get(rule, sign)
        return f"C{position}" + ("" if sgn == 1 else "^-1")
    if rule == "shiftL1":
        i = position
        if i is None or i not in s or (i + 1) not in s:
            raise UnlicensedMoveError("shiftL1 needs adjacent 1-tacks at i, i+1")
        if (i - 1) in s:
            raise UnlicensedMoveError("shiftL1 needs a 0-tack at i-1")
        if not 4 <= i - 1 <= 2 * g:
            raise UnlicensedMoveError("shiftL1 needs 5 <= i <= 2g+1 so that X_{i-1} is a generator")
        return f"X{i - 1}"
    if rule == "shiftL2":
        i = position
        if i is None or i not in s:
            raise UnlicensedMoveError("shiftL2 needs a 1-tack at i")
        if (i - 1) in s or (i - 2) in s:
            raise UnlicensedMoveError("shiftL2 needs 0-tacks at i-1 and i-2")
        if not 4 <= i - 2 <= 2 * g:
            raise UnlicensedMoveError("shiftL2 needs 6 <= i so that X*_{i-2} is a generator")
        return f"Xs{i - 2}"
    if rule == "t1":
        if g < 3:
            raise ValueError("T1 needs g >= 3")
        return "T1" if sign == 1 else "T1^-1"
    raise ValueError(f"unknown rule {rule!r}")


def apply_move(rule: str, s: TackSequence, position: Optional[int] = None,
               sign: int = 1) -> tuple[TackSequence, TwistWord]:
    """Apply a named move; returns the new sequence and the conjugator u (new = u*s)."""
    if rule == "complement":
        if not is_complement_pattern(s):
            raise UnlicensedMoveError("complement needs [[0,0,0,0,1,1,1,1,1,1,0,...,0]] with g >= 4")
        return s.complement(), TwistWord()
    if rule == "chain-shorten":
        raise ValueError("chain-shorten is a product, use chain_shorten()")
    word = _move_word(rule, s, position, sign)
    new = act(word, s)
    if rule == "commute" and new != s:
        raise UnlicensedMoveError(f"C{position} does not commute with {s}")
    return new, parse_word(word, s.g)


def move_words(g: int) -> list[str]:
    """G_g elements used to search for reductions."""
    out = []
    for j in (1, 2, 3):
        out += [f"C{j}", f"C{j}^-1"]
    for m in range(4, 2 * g + 1):
        out += [f"X{m}", f"X{m}^-1", f"Xs{m}", f"Xs{m}^-1"]
    out += ["T1", "T1^-1"]
    return out


# ------------------------------------------------------------ terminal families

def is_shortenable(s: TackSequence) -> bool:
    return s.mask & 0b11111 == 0b11111 and s.length >= 6


def is_complement_pattern(s: TackSequence) -> bool:
    return s.g >= 4 and s.mask == 0b1111110000


# Each entry is (conjugator, square word); the product of conj*square in order.
_EXPLICIT: dict[tuple[int, ...], list[tuple[str, str]]] = {
    (1, 2, 3, 4): [
        ("C1^-1 C2^-1 C3^-1", "Ys4^2"), ("C2^-1 C3^-1", "Ys4^2"), ("C3^-1", "Ys4^2"), ("", "Ys4^2"),
        ("C1 C2 C3", "D4^-1"), ("C2 C3", "D4^-1"), ("C3", "D4^-1"), ("", "D4^-1"),
    ],
    (1, 2, 3, 5): [
        ("Ys4 C3 C2", "D1"), ("Ys4 C3", "D2"), ("Ys4", "D3"), ("Ys4", "D4"),
        ("D4^-1 C3^-1 C2^-1", "D1^-1"), ("D4^-1 C3^-1", "D2^-1"), ("D4^-1", "D3^-1"), ("", "D4^-1"),
    ],
    (1, 2, 5, 7): [
        ("C1^-1 Ys4 C2^-1 C3 Xs5", "D4"), ("Ys4 C2^-1 C3 Xs5", "D4"),
        ("Ys4 C3 D4^-1", "Xs5^2"), ("C3 Ys4 Xs5 D4^-1", "D3"),
        ("C1 C3 C2 D4^-1 Xs5^-1 D4^-1", "D3^-1"), ("C3 C2 D4^-1 Xs5^-1 D4^-1", "D3^-1"),
        ("C3 Xs5^2", "D4^-1"), ("C3 X4", "D6^-1"),
    ],
}

# B4 B4'^-1 written as a product of conjugated squares of chain twists.
_RAW_1234 = [
    ("B4 C4 C3 C2", "C1^2"), ("B4 C4 C3", "C2^2"), ("B4 C4", "C3^2"), ("B4", "C4^2"),
    ("C4^-1 C3^-1 C2^-1", "C1^-2"), ("C4^-1 C3^-1", "C2^-2"), ("C4^-1", "C3^-2"), ("", "C4^-2"),
]
# conjugators carrying [1,2,3,4] to the other two families
FAMILY_CONJUGATOR = {
    (1, 2, 3, 4): "",
    (1, 2, 3, 5): "C4^-1",
    (1, 2, 5, 7): "C4^-1 C3^-1 C6^-1 C5^-1 C4^-1",
}


def terminal_families() -> list[tuple[int, ...]]:
    return list(_EXPLICIT)


def _conj_word(u: str, w: str, g: int) -> TwistWord:
    return parse_word(u, g).conj(parse_word(w, g)) if u else parse_word(w, g)


def explicit_factors(indices: Sequence[int], g: int) -> list[tuple[str, str]]:
    key = tuple(indices)
    if key not in _EXPLICIT:
        raise KeyError(f"{list(indices)} is not one of the terminal families")
    if g < 3:
        raise ValueError("terminal expansions need g >= 3")
    return list(_EXPLICIT[key])


def raw_factors(indices: Sequence[int]) -> list[tuple[str, str]]:
    """Conjugated-square factors before braid rewriting."""
    pre = FAMILY_CONJUGATOR[tuple(indices)]
    return [((pre + " " + u).strip(), sq) for u, sq in _RAW_1234]


def explicit_word(indices: Sequence[int], g: int) -> TwistWord:
    out = TwistWord()
    for u, sq in explicit_factors(indices, g):
        out = out * _conj_word(u, sq, g)
    return out


def direct_word(indices: Sequence[int], g: int) -> TwistWord:
    """FAMILY_CONJUGATOR * (B4 B4'^-1) with no rewriting."""
    return _conj_word(FAMILY_CONJUGATOR[tuple(indices)], "B4 B4'^-1", g)


# ------------------------------------------------------------ certificates

@dataclass(frozen=True)
class CertNode:
    """op is one of leaf, conj, inv, prod, axiom.

    leaf: `word` is the map itself (identity for length 2, explicit otherwise).
    conj: this map equals word * child; `via` is "oracle" (replayed) or
          "rule" (a conjugation fixed by the chain-shortening rule).
    inv:  this map is the inverse of the child.
    prod: product of children, in order (`rule` = "chain-shorten").
    axiom: equal to the child by the complement rule.
    """

    op: str
    tacks: Optional[TackSequence] = None
    word: Optional[TwistWord] = None
    children: tuple["CertNode", ...] = ()
    rule: str = ""
    via: str = ""

    def to_json(self) -> dict:
        out: dict = {"op": self.op}
        if self.tacks is not None:
            out["tacks"] = str(self.tacks)
        if self.word is not None:
            # words are kept letter for letter so that leaf checks survive a round trip
            out["word"] = _fmt_raw(self.word)
        if self.rule:
            out["rule"] = self.rule
        if self.via:
            out["via"] = self.via
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    @classmethod
    def from_json(cls, d: dict, g: int) -> "CertNode":
        tacks = as_tacks(d["tacks"]) if "tacks" in d else None
        word = parse_word(d["word"], g) if "word" in d else None
        kids = tuple(cls.from_json(c, g) for c in d.get("children", ()))
        return cls(d["op"], tacks, word, kids, d.get("rule", ""), d.get("via", ""))

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)


def _fmt_raw(w: TwistWord) -> str:
    if not w.factors:
        return "1"
    return " ".join(s if e == 1 else f"{s}^{e}" for s, e in w.factors)


@dataclass(frozen=True)
class FactorizationCertificate:
    g: int
    target: TackSequence
    root: CertNode

    def to_json(self) -> dict:
        return {"g": self.g, "target": str(self.target), "root": self.root.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "FactorizationCertificate":
        g = int(d["g"])
        return cls(g, as_tacks(d["target"], g), CertNode.from_json(d["root"], g))

    def flatten(self) -> TwistWord:
        return flatten(self.root)


def flatten(node: CertNode) -> TwistWord:
    if node.op == "leaf":
        return node.word or TwistWord()
    if node.op == "conj":
        return node.word.conj(flatten(node.children[0]))
    if node.op == "inv":
        return flatten(node.children[0]).inverse()
    if node.op == "prod":
        out = TwistWord()
        for c in node.children:
            out = out * flatten(c)
        return out
    if node.op == "axiom":
        return flatten(node.children[0])
    raise ValueError(f"unknown op {node.op!r}")


def identity_leaf(s: TackSequence) -> CertNode:
    return CertNode("leaf", s, TwistWord(), rule="length-2")


def explicit_leaf(s: TackSequence) -> CertNode:
    return CertNode("leaf", s, explicit_word(s.indices, s.g), rule="explicit")


# ------------------------------------------------------------ chain shortening

def shorten_parts(s: TackSequence) -> list[TackSequence]:
    """[4, n6..], [1,2,3,5], [1,2,4,n6..], [3,4,5,n6..] for s = [1,2,3,4,5,n6..]."""
    if not is_shortenable(s):
        raise UnlicensedMoveError(f"chain shortening needs tacks 1..5 set and length >= 6, got {s}")
    tail = s.indices[5:]
    g = s.g
    return [
        TackSequence.from_indices([4] + tail, g),
        TackSequence.from_indices([1, 2, 3, 5], g),
        TackSequence.from_indices([1, 2, 4] + tail, g),
        TackSequence.from_indices([3, 4, 5] + tail, g),
    ]


def chain_shorten(s: TackSequence, sub: Optional[dict] = None) -> CertNode:
    """s = [4,n6..]^-1 . D4*[1,2,3,5] . [1,2,4,n6..] . Y4*[3,4,5,n6..].

    `sub` maps a part to its certificate; missing parts become bare leaves
    without words (placeholders that verification rejects).
    """
    a, b, c, d = shorten_parts(s)
    sub = sub or {}

    def cert(t):
        return sub.get(t, CertNode("leaf", t, None, rule="open"))

    g = s.g
    children = (
        CertNode("inv", a, None, (cert(a),)),
        CertNode("conj", b, parse_word("D4", g), (cert(b),), via="rule"),
        cert(c),
        CertNode("conj", d, parse_word("Y4", g), (cert(d),), via="rule"),
    )
    return CertNode("prod", s, None, children, rule="chain-shorten")


# ------------------------------------------------------------ search

def _target_class(s: TackSequence) -> Optional[int]:
    if s.length == 2:
        return 0
    if tuple(s.indices) in _EXPLICIT:
        return 0
    if is_shortenable(s):
        return 1
    if is_complement_pattern(s):
        return 2
    return None


def find_reduction(s: TackSequence) -> tuple[TackSequence, list[str]]:
    """BFS over G_g moves to the best reachable target.

    Targets ranked: terminal or length 2, then shortenable, then the
    complement pattern; ties broken by distance then BFS order.  Returns the
    target and the move words w_1..w_n with target = (w_n ... w_1)*s.
    """
    g = s.g
    moves = move_words(g)
    parent: dict[int, tuple[int, str]] = {s.mask: (-1, "")}
    queue = deque([s.mask])
    best: Optional[tuple[int, int]] = None  # (class, mask)
    while queue:
        m = queue.popleft()
        cls = _target_class(TackSequence(g, m))
        if cls is not None and (best is None or cls < best[0]):
            best = (cls, m)
            if cls == 0:
                break
        for w in moves:
            r = _replay_cached(w, g, m)
            if r is not None and r not in parent:
                parent[r] = (m, w)
                queue.append(r)
    if best is None:
        raise FactorizationError(f"no reduction target reachable from {s}")
    path = []
    m = best[1]
    while parent[m][0] != -1:
        m, w = parent[m][0], parent[m][1]
        path.append(w)
    path.reverse()
    return TackSequence(g, best[1]), path


@dataclass
class _Run:
    memo: dict = field(default_factory=dict)
    active: set = field(default_factory=set)
    shortenings: list = field(default_factory=list)


def _factor(s: TackSequence, run: _Run) -> CertNode:
    if s in run.memo:
        return run.memo[s]
    if s in run.active:
        raise FactorizationError(f"reduction cycles back to {s}")
    run.active.add(s)
    try:
        node = _factor_new(s, run)
    finally:
        run.active.discard(s)
    run.memo[s] = node
    return node


def _factor_new(s: TackSequence, run: _Run) -> CertNode:
    if s.length == 2:
        return identity_leaf(s)
    if tuple(s.indices) in _EXPLICIT:
        return explicit_leaf(s)
    if is_shortenable(s):
        parts = shorten_parts(s)
        run.shortenings.append((s, parts))
        return chain_shorten(s, {p: _factor(p, run) for p in parts})
    if is_complement_pattern(s):
        return CertNode("axiom", s, None, (_factor(s.complement(), run),), rule="complement")
    target, path = find_reduction(s)
    node = _factor(target, run)
    # target = (w_n ... w_1)*s, so s = w_1^-1 * (w_2^-1 * ... target)
    cur = target
    states = [s]
    for w in path[:-1]:
        states.append(act(w, states[-1]))
    for w, before in zip(reversed(path), reversed(states)):
        node = CertNode("conj", before, parse_word(w, s.g).inverse(), (node,), via="oracle")
        cur = before
    assert cur == s
    return node


_SHARED: dict[int, _Run] = {}


def factorize(s: Union[TackSequence, Sequence[int]], g: Optional[int] = None,
              run: Optional[_Run] = None) -> FactorizationCertificate:
    """Certificate writing the odd subchain map s as a product of G_g elements."""
    if not isinstance(s, TackSequence):
        if g is None:
            raise ValueError("index input needs a genus")
        s = TackSequence.from_indices(s, g)
    if s.g < 3:
        raise ValueError("the Torelli rewriting needs g >= 3")
    if not s.is_valid_map():
        raise ValueError(f"{s} is not an odd subchain map (even length >= 2 required)")
    if run is None:
        run = _SHARED.setdefault(s.g, _Run())
    return FactorizationCertificate(s.g, s, _factor(s, run))


def factorize_instrumented(s: TackSequence) -> tuple[FactorizationCertificate, list]:
    """Also return every shortening (parent, parts) used, for termination checks."""
    run = _Run()
    cert = factorize(s, run=run)
    return cert, run.shortenings


# ------------------------------------------------------------ beta chain

BETA = "beta"


@dataclass(frozen=True)
class BetaResult:
    status: str  # "straight" or "requires-geometry"
    tacks: Optional[TackSequence]
    template: Optional[str]


def beta_convert(indices: Sequence[Union[int, str]], g: int) -> BetaResult:
    """Map a subchain of (c_beta, c_5, ..., c_{2g+1}) to the straight chain.

    Without beta the indices already name a straight-chain map.  With beta the
    target indices depend on curve data that is not available here, so only
    the conjugator template is returned.
    """
    if g < 3:
        raise ValueError("the beta chain needs g >= 3")
    has_beta = any(i in (BETA, "β", "b") for i in indices)
    nums = [int(i) for i in indices if i not in (BETA, "β", "b")]
    if any(i < 5 or i > 2 * g + 2 for i in nums):
        raise ValueError(f"beta-chain indices lie in 5..{2 * g + 2}")
    if not has_beta:
        return BetaResult("straight", TackSequence.from_indices(nums, g), None)
    signs = " ".join(f"C{k}^e{k}" for k in range(2 * g + 1, 4, -2))
    return BetaResult("requires-geometry", None, f"{signs} B4^-1")


# ------------------------------------------------------------ verification

@dataclass
class VerificationReport:
    ok: bool = True
    failures: list[tuple[str, str]] = field(default_factory=list)
    flattened_length: int = 0
    image_identity: bool = True
    nodes: int = 0

    def fail(self, path: str, reason: str) -> None:
        self.ok = False
        self.failures.append((path, reason))

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [{"at": p, "reason": r} for p, r in self.failures],
            "flattened_length": self.flattened_length,
            "image_identity": self.image_identity,
            "nodes": self.nodes,
        }


def _check_structure(node: CertNode, path: str, g: int, rep: VerificationReport) -> None:
    rep.nodes += 1
    s = node.tacks
    if s is not None and s.g != g:
        rep.fail(path, f"tacks {s} have genus {s.g}, expected {g}")
        return
    if node.op == "leaf":
        if s is None or node.word is None:
            rep.fail(path, "leaf without tacks or word")
        elif s.length == 2:
            if node.word.normalized().factors:
                rep.fail(path, "length-2 leaf must be the identity")
        elif tuple(s.indices) in _EXPLICIT:
            if node.word != explicit_word(s.indices, g):
                rep.fail(path, f"leaf word differs from the catalog expansion of {s.bracket()}")
        else:
            rep.fail(path, f"{s.bracket()} is not a terminal family")
        return
    if node.op in ("conj", "inv", "axiom") and len(node.children) != 1:
        rep.fail(path, f"{node.op} needs exactly one child")
        return
    if node.op == "conj":
        child = node.children[0]
        if node.via == "oracle":
            if s is None or child.tacks is None:
                rep.fail(path, "oracle conjugation without tacks")
            else:
                try:
                    got = act(node.word, child.tacks)
                except UnlicensedMoveError as err:
                    rep.fail(path, f"replay failed: {err}")
                else:
                    if got != s:
                        rep.fail(path, f"replay gives {got}, node claims {s}")
        elif node.via != "rule":
            rep.fail(path, f"unknown conjugation source {node.via!r}")
    elif node.op == "inv":
        pass
    elif node.op == "axiom":
        child = node.children[0]
        if node.rule != "complement" or s is None or not is_complement_pattern(s):
            rep.fail(path, "complement axiom applied outside its pattern")
        elif child.tacks != s.complement():
            rep.fail(path, "complement child has the wrong tacks")
    elif node.op == "prod":
        if node.rule != "chain-shorten" or s is None:
            rep.fail(path, "product node must be a chain shortening")
        else:
            _check_shortening(node, path, g, rep)
    else:
        rep.fail(path, f"unknown op {node.op!r}")
        return
    for k, c in enumerate(node.children):
        _check_structure(c, f"{path}/{k}", g, rep)


def _check_shortening(node: CertNode, path: str, g: int, rep: VerificationReport) -> None:
    try:
        a, b, c, d = shorten_parts(node.tacks)
    except UnlicensedMoveError as err:
        rep.fail(path, str(err))
        return
    kids = node.children
    if len(kids) != 4:
        rep.fail(path, "chain shortening has four factors")
        return
    want = [("inv", a, None), ("conj", b, "D4"), (None, c, None), ("conj", d, "Y4")]
    for k, (op, t, w) in enumerate(want):
        kid = kids[k]
        if op is not None and kid.op != op:
            rep.fail(f"{path}/{k}", f"expected {op}, found {kid.op}")
            continue
        inner = kid.children[0] if op is not None else kid
        if inner.tacks != t:
            rep.fail(f"{path}/{k}", f"expected tacks {t}, found {inner.tacks}")
        if w is not None and (kid.via != "rule" or kid.word != parse_word(w, g)):
            rep.fail(f"{path}/{k}", f"expected shortening conjugator {w}")


def _node_image(node: CertNode, g: int, path: str, rep: VerificationReport,
                cache: dict) -> SymplecticMatrix:
    key = id(node)
    if key in cache:
        return cache[key]
    I = SymplecticMatrix.identity(g)
    if node.op == "leaf":
        M = evaluate(node.word, g) if node.word is not None else I
    elif node.op == "conj":
        U = evaluate(node.word, g)
        M = U @ _node_image(node.children[0], g, path + "/0", rep, cache) @ U.inverse()
    elif node.op == "inv":
        M = _node_image(node.children[0], g, path + "/0", rep, cache).inverse()
    elif node.op == "prod":
        M = I
        for k, c in enumerate(node.children):
            M = M @ _node_image(c, g, f"{path}/{k}", rep, cache)
    else:
        M = _node_image(node.children[0], g, path + "/0", rep, cache)
    if not M.is_identity():
        rep.image_identity = False
        rep.fail(path, "image in Sp(2g, Z) is not the identity")
    cache[key] = M
    return M


def verify_certificate(cert: FactorizationCertificate) -> VerificationReport:
    g = cert.g
    rep = VerificationReport()
    if cert.root.tacks is not None and cert.root.tacks != cert.target:
        rep.fail("", "root tacks differ from the target")
    _check_structure(cert.root, "", g, rep)
    if not rep.ok:
        # images of malformed trees are still computed to localize failures
        pass
    try:
        _node_image(cert.root, g, "", rep, {})
        flat = cert.flatten()
    except Exception as err:  # malformed tree
        rep.fail("", f"cannot evaluate: {err}")
        return rep
    rep.flattened_length = len(flat)
    bad = sorted({s for s in flat.symbols() if not is_gg_symbol(s, g)})
    if bad:
        rep.fail("", f"symbols outside G_g: {bad}")
    if not evaluate(flat, g).is_identity():
        rep.image_identity = False
        rep.fail("", "flattened word is not the identity in Sp(2g, Z)")
    return rep


def empty_certificate(g: int) -> FactorizationCertificate:
    """Certificate for the empty product (a trivial length-2 map)."""
    s = TackSequence.from_indices([1, 2], g)
    return FactorizationCertificate(g, s, identity_leaf(s))
