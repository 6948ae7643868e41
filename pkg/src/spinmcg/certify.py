"""Homology-level certificates for the generation argument.

Covers: the Phi_2 image dictionary of the G_g generators, the reduction of
every value-1 class of q1 to a short list of base classes under [], the
conjugation identity behind it, finite group orders by breadth-first search,
square transvections in the level-2 kernel, and the block moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence

import numpy as np

from .homology import (
    HomologyClass,
    SymplecticMatrixF2,
    f2_blocks,
    f2_class,
    f2_pairing,
    f2_str,
    in_level2_kernel,
    square_transvection_matrix,
)
from .quadform import DEFAULT_CAP, QuadraticForm, box, eval_form, lambda_set, q1, z2_transvection
from .words import SymbolRangeError, as_word, check_symbol, evaluate, evaluate_f2, gg_generators


# ------------------------------------------------------------------- BFS

class GroupOrderCapExceeded(RuntimeError):
    def __init__(self, partial: int, cap: int):
        super().__init__(f"closure exceeded cap {cap} (reached {partial} elements)")
        self.partial = partial
        self.cap = cap


def _left_mul_packed(gen: SymplecticMatrixF2, arr: np.ndarray) -> np.ndarray:
    """gen @ M for every packed M in arr (row i of M at bits [i n, (i+1) n))."""
    n = 2 * gen.g
    mask = np.uint64((1 << n) - 1)
    rows = [(arr >> np.uint64(k * n)) & mask for k in range(n)]
    out = np.zeros_like(arr)
    for i, r in enumerate(gen.rows):
        acc = np.zeros_like(arr)
        for k in range(n):
            if (r >> k) & 1:
                acc ^= rows[k]
        out |= acc << np.uint64(i * n)
    return out


def _bfs_numpy(gens: Sequence[SymplecticMatrixF2], cap: Optional[int]) -> np.ndarray:
    ident = np.array([SymplecticMatrixF2.identity(gens[0].g).packed()], dtype=np.uint64)
    visited = ident
    frontier = ident
    while frontier.size:
        cand = np.unique(np.concatenate([_left_mul_packed(G, frontier) for G in gens]))
        idx = np.searchsorted(visited, cand)
        idx_c = np.minimum(idx, visited.size - 1)
        new = cand[visited[idx_c] != cand]
        if new.size == 0:
            break
        visited = np.union1d(visited, new)
        frontier = new
        if cap is not None and visited.size > cap:
            raise GroupOrderCapExceeded(int(visited.size), cap)
    return visited


def group_elements_bfs(gens: Sequence[SymplecticMatrixF2], cap: Optional[int] = None) -> list[SymplecticMatrixF2]:
    """All elements of the generated group (small groups only)."""
    if not gens:
        raise ValueError("need at least one generator")
    g = gens[0].g
    if (2 * g) ** 2 <= 64:
        return [SymplecticMatrixF2.from_packed(int(x), g) for x in _bfs_numpy(gens, cap)]
    return list(_bfs_python(gens, cap))


def _bfs_python(gens: Sequence[SymplecticMatrixF2], cap: Optional[int]) -> set:
    ident = SymplecticMatrixF2.identity(gens[0].g)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for G in gens:
                P = G @ M
                if P not in seen:
                    seen.add(P)
                    nxt.append(P)
                    if cap is not None and len(seen) > cap:
                        raise GroupOrderCapExceeded(len(seen), cap)
        frontier = nxt
    return seen


def group_order_bfs(gens: Sequence[SymplecticMatrixF2], cap: Optional[int] = None) -> int:
    """Order of the group generated by `gens` by breadth-first closure."""
    if not gens:
        return 1
    g = gens[0].g
    if any(G.g != g for G in gens):
        raise ValueError("generators of mixed genus")
    if (2 * g) ** 2 <= 64:
        return int(_bfs_numpy(gens, cap).size)
    return len(_bfs_python(gens, cap))


def orbit_bfs(start: Hashable, gens: Sequence, act: Callable) -> list:
    """Orbit of `start` under act(point, gen), in discovery order."""
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for G in gens:
                r = act(p, G)
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    nxt.append(r)
        frontier = nxt
    return order


# ------------------------------------------------------ Phi_2 dictionary

def _X(i: int) -> int:
    return 1 << (2 * (i - 1))


def _Y(i: int) -> int:
    return 1 << (2 * (i - 1) + 1)


def phi2_dictionary(g: int) -> list[tuple[str, int]]:
    """Pairs (generator, z) with Phi_2(generator) expected to be T_z."""
    if g < 2:
        raise ValueError("needs g >= 2")
    out = [("C1", _X(1)), ("C2", _Y(1)), ("C3", _X(1) | _X(2))]
    for i in range(2, g):
        out.append((f"X{2 * i}", _X(i) | _Y(i) | _X(i + 1)))
        out.append((f"X{2 * i + 1}", _X(i) | _X(i + 1) | _Y(i + 1)))
    for j in range(2, g):
        out.append((f"Y{2 * j}", _X(j) | _Y(j)))
    out.append((f"X{2 * g}", _X(g) | _Y(g)))
    return out


@dataclass
class Phi2Report:
    g: int
    entries: list[tuple[str, int, bool]]

    @property
    def ok(self) -> bool:
        return all(e[2] for e in self.entries)

    @property
    def first_mismatch(self) -> Optional[tuple[str, int]]:
        for name, z, good in self.entries:
            if not good:
                return name, z
        return None


def verify_phi2_images(g: int) -> Phi2Report:
    entries = []
    for name, z in phi2_dictionary(g):
        entries.append((name, z, evaluate_f2(name, g) == z2_transvection(z, g)))
    return Phi2Report(g, entries)


# --------------------------------------------------------- Lambda reduction

def base_generators(g: int) -> list[int]:
    """x1, y1, x1+x2, x_i+y_i, x_i+y_i+x_{i+1}, x_i+x_{i+1}+y_{i+1}."""
    out = [_X(1), _Y(1), _X(1) | _X(2)]
    out += [_X(i) | _Y(i) for i in range(2, g + 1)]
    out += [_X(i) | _Y(i) | _X(i + 1) for i in range(2, g)]
    out += [_X(i) | _X(i + 1) | _Y(i + 1) for i in range(2, g)]
    return out


@dataclass
class LambdaTrace:
    start: int
    steps: list[tuple[int, int]]  # (generator used, class after the step)

    @property
    def end(self) -> int:
        return self.steps[-1][1] if self.steps else self.start

    def to_json(self) -> list[str]:
        return [f2_str(b) for b, _ in self.steps]


def lambda_reduce(z: int, g: int, q: Optional[QuadraticForm] = None,
                  stop_at_base: bool = True) -> LambdaTrace:
    """Reduce z (q1(z) = 1) to a base class by [] with base classes.

    Works on the rightmost (1,1) block, moving it left one block at a time,
    then clears the remaining blocks from the right.  With stop_at_base=False
    the rules run until x1 or y1 even when z is already a base class.
    """
    q = q or q1(g)
    if q != q1(g):
        raise ValueError("the reduction rules are written for q1")
    if eval_form(q, z) != 1:
        raise ValueError(f"{f2_str(z)} has q-value 0")
    base = set(base_generators(g)) if stop_at_base else {_X(1), _Y(1)}
    start = z
    steps: list[tuple[int, int]] = []

    def do(b: int) -> None:
        nonlocal z
        z = box(z, b, q)
        steps.append((b, z))

    while z not in base:
        blocks = f2_blocks(z, g)
        full = [i + 1 for i, b in enumerate(blocks) if b == (1, 1)]
        if not full:
            # q1(z) = 1 forces block 1 to be (1,0) or (0,1); make it (1,1)
            do(_Y(1) if blocks[0] == (1, 0) else _X(1))
            continue
        j = full[-1]
        if j >= 3:
            prev = blocks[j - 2]
            if prev == (1, 0):
                do(_X(j - 1) | _Y(j - 1))
                prev = (0, 1)
            if prev == (0, 0):
                do(_X(j - 1) | _Y(j - 1) | _X(j))
            else:
                do(_X(j - 1) | _X(j) | _Y(j))
            continue
        if j == 2:
            do(_X(1) | _X(2))
            do(_Y(1))
            continue
        # j == 1: every other block is (0,0), (1,0) or (0,1)
        if all(b == (0, 0) for b in blocks[1:]):
            do(_Y(1))
            continue
        while True:
            blocks = f2_blocks(z, g)
            for i in range(3, g + 1):
                left, right = blocks[i - 2], blocks[i - 1]
                if left == (0, 0) and right != (0, 0):
                    do(_X(i - 1) | _X(i) | _Y(i))
                    break
                if left != (0, 0) and right == (0, 0):
                    do(_X(i - 1) | _Y(i - 1) | _X(i))
                    break
            else:
                break
        for i in range(2, g + 1):
            if f2_blocks(z, g)[i - 1] == (0, 1):
                do(_X(i) | _Y(i))
        for i in range(g, 2, -1):
            do(_X(i - 1) | _Y(i - 1) | _X(i))
            do(_X(i - 1) | _Y(i - 1))
        do(_X(1) | _X(2))
    return LambdaTrace(start, steps)


def replay_trace(trace: LambdaTrace, g: int) -> bool:
    """Re-run a trace with box() and check it uses and ends at base classes."""
    q = q1(g)
    base = set(base_generators(g))
    z = trace.start
    for b, after in trace.steps:
        if b not in base:
            return False
        z = box(z, b, q)
        if z != after:
            return False
    return z in base


def conjugation_identity(z1: int, z2: int, g: int) -> bool:
    """T_{z2} T_{z1} T_{z2}^-1 == T_{z1 [] z2} (T is an involution)."""
    T2 = z2_transvection(z2, g)
    lhs = T2 @ z2_transvection(z1, g) @ T2
    z = z1 ^ z2 if f2_pairing(z2, z1) else z1
    return lhs == z2_transvection(z, g)


@dataclass
class GenerationCertificate:
    g: int
    phi2: Phi2Report
    base_transvections: list[tuple[int, str]]
    closure_trace: dict[int, LambdaTrace]
    traces_replay: bool
    conjugation_pairs_checked: int
    conjugation_ok: bool
    orders: dict[str, int] = field(default_factory=dict)

    @property
    def transitive(self) -> bool:
        return self.traces_replay

    @property
    def ok(self) -> bool:
        orders_ok = not self.orders or self.orders["generated"] == self.orders["stabilizer_of_q1"]
        return self.phi2.ok and self.traces_replay and self.conjugation_ok and orders_ok

    def max_trace_length(self) -> int:
        return max((len(t.steps) for t in self.closure_trace.values()), default=0)

    def to_json(self) -> dict:
        return {
            "genus": self.g,
            "ok": self.ok,
            "base": [{"class": f2_str(z), "generator": name} for z, name in self.base_transvections],
            "phi2": [{"generator": n, "class": f2_str(z), "ok": good} for n, z, good in self.phi2.entries],
            "lambda_size": len(self.closure_trace),
            "traces": {f2_str(z): t.to_json() for z, t in self.closure_trace.items()},
            "conjugation_pairs_checked": self.conjugation_pairs_checked,
            "orders": self.orders,
        }


def certify_o_q1_generation(g: int, cap: int = DEFAULT_CAP) -> GenerationCertificate:
    """Certify that Phi_2(G_g) contains every T_z with q1(z) = 1."""
    if g < 2:
        raise ValueError("needs g >= 2")
    q = q1(g)
    lam = lambda_set(q, cap)
    phi2 = verify_phi2_images(g)
    names = dict((z, n) for n, z in phi2_dictionary(g))
    base = [(z, names[z]) for z in base_generators(g)]
    traces = {z: lambda_reduce(z, g) for z in lam}
    replay = all(replay_trace(t, g) for t in traces.values())
    if g <= 3:
        pairs = [(a, b) for a in lam for b in lam]
    else:
        pairs = sorted({(t.start if i == 0 else t.steps[i - 1][1], b)
                        for t in traces.values() for i, (b, _) in enumerate(t.steps)})
    conj_ok = all(conjugation_identity(a, b, g) for a, b in pairs)
    orders: dict[str, int] = {}
    if g == 2:
        # no Dieudonne route at genus 2: compare orders directly
        gens = [evaluate_f2(w, g) for w in gg_generators(g)]
        sp = group_order_bfs([evaluate_f2(f"C{i}", g) for i in range(1, 6)])
        odd = len([b for b in range(16) if QuadraticForm(2, b).arf() == 1])
        orders = {"generated": group_order_bfs(gens), "sp": sp, "odd_forms": odd,
                  "stabilizer_of_q1": sp // odd}
    return GenerationCertificate(g, phi2, base, traces, replay, len(pairs), conj_ok, orders)


# ------------------------------------------------------ square transvections

def _square_word_candidates(g: int) -> list[str]:
    out = [f"D{k}" for k in range(1, 2 * g + 2)]
    out += [f"DB{k}" for k in range(4, 2 * g - 1, 2)]
    out += [f"{s}{k}^2" for s in ("X", "Xs") for k in range(4, 2 * g + 1)]
    out += [f"{s}{k}^2" for s in ("Y", "Ys") for k in range(4, 2 * g - 1, 2)]
    out.append("(C1 C2 C1^-1)^2")
    return out


def named_square_realizations(g: int) -> list[tuple[int, str]]:
    """The explicit square-transvection words used in the level-2 step.

    The block-2 and block-3 entries are Ys4^2 and Ys6^2 (X4^2 at genus 2 and
    X6^2 at genus 3), as matrix evaluation confirms.
    """
    out = [(_Y(1), "D2"), (_X(1) | _Y(1), "(C1 C2 C1^-1)^2")]
    if g >= 3:
        out.append((_X(2) | _Y(2), "Ys4^2"))
    elif g == 2:
        out.append((_X(2) | _Y(2), "X4^2"))
    out.append((_Y(2), "D4"))
    if g >= 4:
        out.append((_X(3) | _Y(3), "Ys6^2"))
    elif g == 3:
        out.append((_X(3) | _Y(3), "X6^2"))
    return out


@dataclass
class SquareReport:
    g: int
    classes: int
    in_kernel: int
    realized: dict[int, str]
    named_entries: list[tuple[int, str, bool]]

    @property
    def ok(self) -> bool:
        return self.in_kernel == self.classes and all(e[2] for e in self.named_entries)


def verify_square_transvections(g: int) -> SquareReport:
    if not 1 <= g <= 6:
        raise ValueError("square-transvection sweep is limited to g <= 6")
    by_matrix = {}
    if g >= 2:
        for w in _square_word_candidates(g):
            by_matrix.setdefault(evaluate(w, g), w)
    in_kernel = 0
    realized = {}
    for v in range(1, 1 << (2 * g)):
        M = square_transvection_matrix(HomologyClass.from_mod2(v, g))
        in_kernel += in_level2_kernel(M)
        if M in by_matrix:
            realized[v] = by_matrix[M]
    named = []
    if g >= 2:
        for v, w in named_square_realizations(g):
            M = square_transvection_matrix(HomologyClass.from_mod2(v, g))
            named.append((v, w, evaluate(w, g) == M))
    return SquareReport(g, (1 << (2 * g)) - 1, in_kernel, realized, named)


# ---------------------------------------------------------------- block moves

# (rule, word template, left blocks, right blocks); i is the left block index.
# Words compose functionally: the rightmost letter is the first picture label.
BLOCK_RULES = [
    ("a", "Xs{2i}^-1 Xs{2i+1}^-1", ((0, 0), (0, 1)), ((0, 1), (0, 0))),
    ("b", "D{2i}^-1 Xs{2i}^-1", ((0, 0), (1, 1)), ((1, 1), (0, 1))),
    ("c", "Xs{2i}^-1 Xs{2i+1}^-1 DB{2i+2}^-1 X{2i}", ((1, 1), (1, 1)), ((0, 1), (0, 0))),
    ("d", "Ys{2i} X{2i}^-1 Ys{2i+2}^-1", ((0, 1), (0, 1)), ((0, 1), (0, 0))),
    ("e", "DB{2i}^-1 X{2i+1}^-1 DB{2i+2}^-1", ((0, 1), (1, 1)), ((1, 1), (0, 0))),
]

# moves touching the first block (i = 1)
FIRST_BLOCK_RULES = [
    ("f1", "C1", ((0, 1), (1, 1)), ((1, 1), (1, 1))),
    ("f2", "DB4^-1 C3 C2", ((1, 1), (1, 1)), ((0, 0), (0, 1))),
    ("f3", "C1", ((0, 1), (0, 1)), ((1, 1), (0, 1))),
    ("f4", "C3 C2", ((1, 1), (0, 1)), ((0, 0), (1, 1))),
]


def _fill(template: str, i: int, g: int) -> str:
    return (template.replace("{2i+2}", str(2 * i + 2)).replace("{2i+1}", str(2 * i + 1))
            .replace("{2i}", str(2 * i)).replace("{2g+1}", str(2 * g + 1)).replace("{2g}", str(2 * g)))


@dataclass
class BlockMoveResult:
    rule: str
    i: int
    word: str
    left: tuple
    right: tuple
    ok: bool


def _check_block_move(word: str, i: int, width: int, left, right, g: int) -> bool:
    M = evaluate_f2(word, g)
    others = [k for k in range(1, g + 1) if not i <= k < i + width]
    for ctx in range(1 << (2 * len(others))):
        blocks = [(0, 0)] * g
        for n, k in enumerate(others):
            blocks[k - 1] = ((ctx >> 2 * n) & 1, (ctx >> 2 * n + 1) & 1)
        src, dst = list(blocks), list(blocks)
        for d in range(width):
            src[i - 1 + d] = left[d]
            dst[i - 1 + d] = right[d]
        if M.apply(f2_class(g, src)) != f2_class(g, dst):
            return False
    return True


def _valid(word: str, g: int) -> bool:
    try:
        as_word(word, g)
    except SymbolRangeError:
        return False
    return True


def verify_block_moves(g: int) -> list[BlockMoveResult]:
    """Check each block move's Phi_2 image on every class with the left pattern."""
    out = []
    for i in range(2, g):
        for rule, tmpl, left, right in BLOCK_RULES:
            w = _fill(tmpl, i, g)
            if _valid(w, g):
                out.append(BlockMoveResult(rule, i, w, left, right,
                                           _check_block_move(w, i, 2, left, right, g)))
    if g >= 3:
        for rule, w, left, right in FIRST_BLOCK_RULES:
            out.append(BlockMoveResult(rule, 1, w, left, right,
                                       _check_block_move(w, 1, 2, left, right, g)))
    # single block (1,0) -> (0,1)
    for i in range(1, g + 1):
        if i == 1:
            w = "C2 C1^-1 C2^-1"
        elif i == g:
            w = _fill("C{2g} C{2g+1}^-1 C{2g}^-1", i, g)
        else:
            w = f"Y{2 * i}^-1"
        out.append(BlockMoveResult("x-to-y", i, w, ((1, 0),), ((0, 1),),
                                   _check_block_move(w, i, 1, ((1, 0),), ((0, 1),), g)))
    return out
