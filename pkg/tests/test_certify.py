import itertools

import pytest

from spinmcg.certify import (
    GroupOrderCapExceeded,
    LambdaTrace,
    base_generators,
    certify_o_q1_generation,
    conjugation_identity,
    group_elements_bfs,
    group_order_bfs,
    lambda_reduce,
    orbit_bfs,
    phi2_dictionary,
    replay_trace,
    verify_block_moves,
    verify_phi2_images,
    verify_square_transvections,
)
from spinmcg.homology import SymplecticMatrixF2, f2_parse, f2_str
from spinmcg.quadform import act_form, lambda_set, q1
from spinmcg.words import evaluate_f2, gg_generators, mcg_generator_names


def sp_order(g):
    n = 2 ** (g * g)
    for i in range(1, g + 1):
        n *= 2 ** (2 * i) - 1
    return n


def naive_closure(gens):
    seen = {SymplecticMatrixF2.identity(gens[0].g)}
    todo = list(seen)
    while todo:
        M = todo.pop()
        for G in gens:
            N = G @ M
            if N not in seen:
                seen.add(N)
                todo.append(N)
    return seen


def test_phi2_dictionary_size():
    assert len(phi2_dictionary(2)) == 4
    assert len(phi2_dictionary(3)) == 7
    for g in range(2, 7):
        assert len(phi2_dictionary(g)) == 3 * g - 2
        assert verify_phi2_images(g).ok


def test_phi2_first_entries():
    g = 3
    d = dict(phi2_dictionary(g))
    assert f2_str(d["C1"]) == "x1"
    assert f2_str(d["C2"]) == "y1"
    assert f2_str(d["C3"]) == "x1+x2"
    assert f2_str(d["X4"]) == "x2+y2+x3"
    assert f2_str(d["X5"]) == "x2+x3+y3"
    assert f2_str(d["Y4"]) == "x2+y2"
    assert f2_str(d["X6"]) == "x3+y3"


def test_bfs_order_sp4():
    gens = [evaluate_f2(n, 2) for n in mcg_generator_names(2)]
    assert group_order_bfs(gens) == 720 == sp_order(2)
    assert len(naive_closure(gens)) == 720
    assert set(group_elements_bfs(gens)) == naive_closure(gens)


def test_bfs_order_generated_g2():
    gens = [evaluate_f2(w, 2) for w in gg_generators(2)]
    assert group_order_bfs(gens) == 120 == len(naive_closure(gens))


def test_bfs_cap():
    gens = [evaluate_f2(n, 2) for n in mcg_generator_names(2)]
    with pytest.raises(GroupOrderCapExceeded) as exc:
        group_order_bfs(gens, cap=100)
    assert exc.value.cap == 100


def test_orbit_of_odd_forms():
    for g in (2, 3):
        gens = [evaluate_f2(n, g) for n in mcg_generator_names(g)]
        orbit = orbit_bfs(q1(g), gens, act_form)
        assert len(orbit) == 2 ** (g - 1) * (2 ** g - 1)
        assert all(q.arf() == 1 for q in orbit)


def test_base_generators_are_in_lambda():
    for g in range(2, 7):
        q = q1(g)
        bs = base_generators(g)
        assert len(bs) == len(set(bs)) == 3 * g - 2
        assert all(q(b) == 1 for b in bs)
        assert set(bs) == {z for _, z in phi2_dictionary(g)}


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_every_lambda_class_reduces(g):
    for z in lambda_set(q1(g)):
        tr = lambda_reduce(z, g)
        assert replay_trace(tr, g), f2_str(z)


def test_lambda_examples():
    g = 2
    tr = lambda_reduce(f2_parse("x2+y2", g), g, stop_at_base=False)
    # the (1,1) block in position 2 moves to position 1 by x1+x2 then y1
    assert [(f2_str(b), f2_str(a)) for b, a in tr.steps[:2]] == [("x1+x2", "x1+y2"), ("y1", "x1+y1+y2")]
    assert tr.end in (f2_parse("x1", g), f2_parse("y1", g))
    one = lambda_reduce(f2_parse("x1+y1", g), g)
    assert [(f2_str(b), f2_str(a)) for b, a in one.steps] == [("y1", "x1")]
    last = lambda_reduce(f2_parse("x1+y1+x2", g), g)
    assert [(f2_str(b), f2_str(a)) for b, a in last.steps] == [("x1+x2", "y1")]
    assert lambda_reduce(f2_parse("x2+y2", g), g).steps == []
    with pytest.raises(ValueError):
        lambda_reduce(f2_parse("x2", g), g)


def test_replay_detects_tampering():
    g = 3
    z = f2_parse("x1+y2", g)
    tr = lambda_reduce(z, g)
    assert replay_trace(tr, g)
    b, after = tr.steps[0]
    bad = LambdaTrace(tr.start, [(b, after ^ 1)] + tr.steps[1:])
    assert not replay_trace(bad, g)


def test_conjugation_identity_exhaustive():
    for g in (2, 3):
        lam = lambda_set(q1(g))
        assert all(conjugation_identity(a, b, g) for a, b in itertools.product(lam, repeat=2))


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_certificate(g):
    cert = certify_o_q1_generation(g)
    assert cert.ok
    assert len(cert.closure_trace) == 2 ** (2 * g - 1) + 2 ** (g - 1)
    assert cert.to_json()["lambda_size"] == len(cert.closure_trace)
    if g == 2:
        assert cert.orders == {"generated": 120, "sp": 720, "odd_forms": 6, "stabilizer_of_q1": 120}


def test_certificate_needs_genus2():
    with pytest.raises(ValueError):
        certify_o_q1_generation(1)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_square_transvections(g):
    rep = verify_square_transvections(g)
    assert rep.ok
    assert rep.in_kernel == rep.classes == 4 ** g - 1


@pytest.mark.parametrize("g", [3, 4, 5])
def test_block_moves(g):
    res = verify_block_moves(g)
    assert res
    assert all(r.ok for r in res), [r for r in res if not r.ok]
