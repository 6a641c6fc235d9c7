import json

import pytest

import revsc


def test_build_and_run():
    m = revsc.Dfa(2, 2, [[0, 1], [1, 1]], 0, [1])
    assert m.states == 2
    assert m.alphabet_size == 2
    assert m.initial == 0
    assert m.accepting == [1]
    assert m.delta == [[0, 1], [1, 1]]
    assert m.next(0, 1) == 1
    assert m.accepts([0, 1])
    assert not m.accepts([])


def test_build_rejects_bad_tables():
    with pytest.raises(ValueError):
        revsc.Dfa(2, 1, [[0], [2]], 0, [])


def test_complexities_and_classes():
    w = revsc.fig2_witness(6)
    assert revsc.state_complexity(w) == 6
    assert revsc.reverse_state_complexity(w) == 16
    assert revsc.is_partially_ordered(w)
    assert revsc.is_r_trivial(w)
    assert not revsc.is_j_trivial(w)
    assert revsc.is_j_trivial(revsc.fig5_witness(6))
    assert revsc.is_j_trivial(revsc.fig5_witness(6), method="trahtman")
    assert revsc.dead_states(w) == [5]


def test_minimize_and_complement():
    redundant = revsc.Dfa(3, 1, [[1], [2], [1]], 0, [1, 2])
    m = revsc.minimize(redundant)
    assert m.states == 2
    c = revsc.complement(m)
    assert c.accepts([])


def test_table1_and_bounds():
    for n, rsc in [(2, 2), (4, 7), (5, 12)]:
        w = revsc.table1_witness(n)
        assert revsc.state_complexity(w) == n
        assert revsc.reverse_state_complexity(w) == rsc
    assert revsc.r_trivial_reverse_bound(6, 2) == 21
    assert revsc.binary_j_trivial_reverse_bound(7) == 38
    assert revsc.j_trivial_alphabet_bound(5, 3) == 15
    assert revsc.j_trivial_alphabet_bound(7, 3) is None
    assert revsc.table1_expression(2) == "a*b(a+b)*"


def test_regex():
    m = revsc.regex_to_min_dfa("a*b(a+b)*", ["a", "b"])
    assert m.states == 2
    assert m.accepts([1])


def test_json_and_dot_round_trip():
    w = revsc.table1_witness(3)
    text = revsc.dfa_to_json(w)
    parsed = json.loads(text)
    assert parsed["states"] == 3
    assert revsc.dfa_from_json(text) == w
    assert revsc.dfa_from_dot(revsc.dfa_to_dot(w)) == w


def test_worst_case_search():
    rec = revsc.worst_case_reverse(4, 2)
    assert rec["max_reverse_sc"] == 7
    assert rec["witness"] is not None
    assert revsc.reverse_state_complexity(rec["witness"]) == 7
    jt = revsc.worst_case_reverse(4, 2, klass="j", dead="forbid", jobs=2)
    assert jt["max_reverse_sc"] == 7
