import itertools
import random

import pytest
from hypothesis import given, strategies as st

from spinmcg.homology import SymplecticMatrixF2, f2_pairing, f2_transvection
from spinmcg.quadform import (
    CapExceededError,
    QuadraticForm,
    act_form,
    arf,
    box,
    eval_form,
    eval_form_ordered,
    forms,
    lambda_set,
    named_form,
    q0,
    q1,
    z2_transvection,
)
from spinmcg.words import evaluate_f2, mcg_generator_names


def naive_eval(q, v):
    """Expand v one basis vector at a time, x1 first."""
    acc, val = 0, 0
    for k in range(2 * q.g):
        if (v >> k) & 1:
            val ^= q.values[k] ^ f2_pairing(acc, 1 << k)
            acc |= 1 << k
    return val


def majority_arf(q):
    ones = sum(naive_eval(q, v) for v in range(1 << (2 * q.g)))
    return int(ones > (1 << (2 * q.g)) // 2)


def form_strategy(gmax=4):
    return st.integers(1, gmax).flatmap(
        lambda g: st.integers(0, 4 ** g - 1).map(lambda b: QuadraticForm(g, b)))


def test_parse_and_values():
    q = QuadraticForm.parse("[1, 1,0,0]")
    assert q == q1(2) and q.values == [1, 1, 0, 0] and str(q) == "[1,1,0,0]"
    assert named_form("q0", 3) == q0(3)
    with pytest.raises(ValueError):
        QuadraticForm.parse("[1,1,0]")
    with pytest.raises(ValueError):
        named_form("[1,1]", 2)
    with pytest.raises(ValueError):
        QuadraticForm(1, 0b100)


def test_arf_values():
    for g in range(1, 6):
        assert arf(q0(g)) == 0
        assert arf(q1(g)) == 1


@given(form_strategy())
def test_arf_is_majority_value(q):
    assert arf(q) == majority_arf(q) == q.arf()


@given(form_strategy(), st.data())
def test_eval_matches_naive_and_any_order(q, data):
    v = data.draw(st.integers(0, 4 ** q.g - 1))
    order = data.draw(st.permutations(range(2 * q.g)))
    assert eval_form(q, v) == naive_eval(q, v) == eval_form_ordered(q, v, order) == q(v)


@given(form_strategy(), st.data())
def test_quadratic_identity(q, data):
    u = data.draw(st.integers(0, 4 ** q.g - 1))
    v = data.draw(st.integers(0, 4 ** q.g - 1))
    assert eval_form(q, u ^ v) == eval_form(q, u) ^ eval_form(q, v) ^ f2_pairing(u, v)


def test_eval_rejects_foreign_class():
    with pytest.raises(ValueError):
        eval_form(q1(1), 0b100)


def test_form_counts():
    for g in range(1, 5):
        even = forms(g, arf_value=0)
        odd = forms(g, arf_value=1)
        assert len(even) == 2 ** (g - 1) * (2 ** g + 1)
        assert len(odd) == 2 ** (g - 1) * (2 ** g - 1)
    assert len(forms(2, arf_value=1)) == 6


def test_cap():
    with pytest.raises(CapExceededError):
        forms(9)
    with pytest.raises(CapExceededError):
        lambda_set(q1(9))
    assert len(lambda_set(q1(3), cap=3)) == 36


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5, 6])
def test_lambda_size_brute_force(g):
    q = q1(g)
    brute = [v for v in range(1, 1 << (2 * g)) if naive_eval(q, v) == 1]
    assert lambda_set(q) == brute
    assert len(brute) == 2 ** (2 * g - 1) + 2 ** (g - 1)


def test_act_form_is_right_action():
    g = 3
    rng = random.Random(7)
    names = mcg_generator_names(g)
    for _ in range(50):
        a = evaluate_f2(" ".join(rng.choices(names, k=5)), g)
        b = evaluate_f2(" ".join(rng.choices(names, k=5)), g)
        q = QuadraticForm(g, rng.randrange(64))
        assert act_form(q, a @ b) == act_form(act_form(q, a), b)
        assert act_form(q, a).arf() == q.arf()
        for v in range(64):
            assert act_form(q, a)(v) == q(a.apply(v))


def test_transvection_fixes_form_iff_value_one():
    g = 2
    for q in forms(g):
        for z in range(1, 16):
            moved = act_form(q, z2_transvection(z, g)) != q
            assert moved == (q(z) == 0)


def test_box():
    g = 2
    q = q1(g)
    assert box(0b0001, 0b0010, q) == 0b0011
    assert box(0b0001, 0b0101, q) == 0b0001
    with pytest.raises(ValueError):
        box(0b0100, 0b0001, q)


def test_box_is_transvection_action():
    g = 3
    q = q1(g)
    for z1, z2 in itertools.product(lambda_set(q), repeat=2):
        assert box(z1, z2, q) == f2_transvection(z2, g).apply(z1)


def test_z2_transvection_errors():
    with pytest.raises(ValueError):
        z2_transvection(0, 2)
    with pytest.raises(ValueError):
        z2_transvection(1 << 4, 2)


def test_act_form_rejects_nonsymplectic():
    with pytest.raises(ValueError):
        act_form(q1(1), SymplecticMatrixF2((1, 1), 1))
