import itertools

import pytest

from spinmcg import genus2
from spinmcg.certify import group_elements_bfs
from spinmcg.quadform import QuadraticForm, act_form, forms, q1
from spinmcg.words import TwistWord, evaluate, evaluate_f2

G = 2


def test_coset_graph_is_the_path():
    cg = genus2.coset_graph()
    assert len(cg.vertices) == 6 and len(cg.edges) == 5
    verts, labels = cg.path_order()
    assert [str(v) for v in verts] == ["[0,1,1,1]", "[0,0,1,1]", "[1,0,1,1]", "[1,1,1,0]", "[1,1,0,0]", "[1,1,0,1]"]
    assert labels == ["C1", "C2", "C3", "C4", "C5"]
    assert cg.base == q1(G)


def test_coset_graph_edges_brute_force():
    # independent: act on every odd form with every C_i, by direct evaluation of q(Mv)
    odd = [q for q in forms(G) if q.arf() == 1]
    edges = set()
    for q in odd:
        for i in range(1, 6):
            M = evaluate_f2(f"C{i}", G)
            r = QuadraticForm.from_values([q(M.apply(1 << k)) for k in range(4)])
            if r != q:
                edges.add((frozenset((q, r)), f"C{i}"))
    got = {(frozenset((u, v)), lab) for u, lab, v in genus2.coset_graph().edges}
    assert got == edges


def test_walk_reads_left_to_right():
    q = q1(G)
    w = "C4 C3"
    step = act_form(act_form(q, evaluate_f2("C4", G)), evaluate_f2("C3", G))
    assert genus2.walk(w) == step == act_form(q, evaluate_f2(w, G))


def test_representatives():
    reps = genus2.coset_representatives()
    ends = {genus2.walk(s) for s in reps}
    assert len(ends) == 6
    assert str(genus2.representative("C2 C4 C5 C3")) == "C4 C3"
    assert str(genus2.representative("D1 D2")) == "1"


def test_printed_table_mismatches():
    t = genus2.schreier_table()
    assert t.matches == 26
    assert {(e.row, e.column) for e in t.mismatches()} == set(genus2.TABLE1_CORRECTIONS)
    assert t.to_text().splitlines()[-1] == "26/30 entries matrix-verified"


def test_corrected_table_matches():
    t = genus2.schreier_table(genus2.table1_corrected())
    assert t.ok and t.matches == 30
    assert all(e.member for e in t.entries)
    js = t.to_json()
    assert js["matched"] == 30 and js["total"] == 30
    assert {e["status"] for e in js["entries"]} == {"matrix-verified"}


def test_schreier_generators_are_in_spin():
    for s in genus2.REPRESENTATIVES:
        for c in genus2.GENERATORS:
            w = genus2.schreier_generator(s, c)
            assert genus2.walk(w) == q1(G)


def test_schreier_generators_generate_stabilizer():
    gens = [evaluate_f2(genus2.schreier_generator(s, c), G)
            for s, c in itertools.product(genus2.REPRESENTATIVES, genus2.GENERATORS)]
    assert len(group_elements_bfs(gens)) == 120


def test_presentation():
    rep = genus2.verify_presentation_sp4()
    assert rep.ok
    assert rep.relation3_identity and rep.relation4_base_negated
    assert len(rep.checks) == 6 + 4 + 1 + 1 + 5
    assert {c.family for c in rep.checks} == {1, 2, 3, 4, 5}


def test_relation4_base_is_minus_identity():
    M = evaluate(genus2.RELATION4_BASE, G)
    assert M.rows == tuple(tuple(-int(i == j) for j in range(4)) for i in range(4))


def test_broken_relation_detected():
    assert evaluate("C1 C2 C1", G) != evaluate("C2 C1 C1", G)


@pytest.mark.parametrize("row", genus2.REPRESENTATIVES)
def test_corrected_rows_parse(row):
    for e in genus2.table1_corrected()[row]:
        assert isinstance(evaluate(e, G).rows, tuple)


def test_identity_word_is_table_identity():
    assert evaluate(TwistWord(), G).is_identity()
