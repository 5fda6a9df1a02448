from collections import Counter
from fractions import Fraction as Q

import pytest
from hypothesis import given

from conftest import generated_instances
from onechroma import fixtures as F
from onechroma.discharge import (
    EULER_TOTAL,
    RULE_AMOUNTS,
    DisconnectedError,
    Element,
    Kind,
    apply_rules,
    euler_charge_total,
    format_ledger,
    initial_charges,
    negative_elements,
)
from onechroma.drawing import InvalidDrawingError, PlanarizedGraph, planarize, trace_faces


def V(i):
    return Element(Kind.ORIGINAL_VERTEX, i)


def _ledger(d):
    return apply_rules(planarize(d), d.graph)


def _face_id(p, degree_wanted):
    return [i for i, f in enumerate(p.faces) if len(f) == degree_wanted]


def expected_finals(p, g):
    """Rules R1-R4 evaluated element by element, without building a transfer log."""
    deg = g.degrees()
    out = Counter()
    for x, c in initial_charges(p).initial.items():
        out[x] += c
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            amt = Q(0)
            if deg[a] == 7 and 2 <= deg[b] <= 6:
                amt = Q(1, deg[b] - 1)
            elif deg[a] == 6 and deg[b] == 3:
                amt = Q(1, 2)
            elif deg[a] == 6 and deg[b] == 4:
                amt = Q(1, 6)
            out[V(a)] -= amt
            out[V(b)] += amt
    for i, f in enumerate(p.faces):
        fe = Element(Kind.FACE, i)
        if len(f) == 3 and sum(p.is_crossing(x) for x in f) == 1:
            for x in f:
                if not p.is_crossing(x):
                    out[V(x)] -= Q(1, 2)
                    out[fe] += Q(1, 2)
        if len(f) >= 6:
            for x in f:
                if not p.is_crossing(x) and deg[x] == 3:
                    out[fe] -= Q(2, 3)
                    out[V(x)] += Q(2, 3)
    return dict(out)


def test_hexx_initial_and_final():
    d = F.hexx()
    p = planarize(d)
    led = apply_rules(p, d.graph)
    assert led.initial[Element(Kind.CROSSING_VERTEX, 6)] == 0
    assert [led.initial[V(i)] for i in range(6)] == [-1, -1, -2, -1, -1, -2]
    face_init = sorted(led.initial[Element(Kind.FACE, i)] for i in range(p.num_faces))
    assert face_init == [-1, -1, 0, 0, 2]
    assert led.initial_total == led.final_total == -8
    for i in _face_id(p, 3):
        assert led.final[Element(Kind.FACE, i)] == 0
    (outer,) = _face_id(p, 6)
    assert led.final[Element(Kind.FACE, outer)] == Q(-2, 3)
    assert {t.rule for t in led.transfers} == {"R3", "R4"}
    r4_targets = sorted(t.target.id for t in led.transfers if t.rule == "R4")
    assert r4_targets == [0, 1, 3, 4]


def test_hexx_negative_elements():
    led = _ledger(F.hexx())
    neg = dict(negative_elements(led))
    assert neg[V(2)] == neg[V(5)] == -2
    assert Q(-2, 3) in neg.values()
    values = [c for _, c in negative_elements(led)]
    assert values == sorted(values)


def test_cube_and_k4():
    led = _ledger(F.cube())
    assert all(led.initial[V(i)] == -1 for i in range(8))
    assert all(c == 0 for x, c in led.initial.items() if x.kind is Kind.FACE)
    assert led.initial_total == -8
    k4 = _ledger(F.k4())
    vs = sum(c for x, c in k4.initial.items() if x.kind is Kind.ORIGINAL_VERTEX)
    fs = sum(c for x, c in k4.initial.items() if x.kind is Kind.FACE)
    assert (vs, fs) == (-4, -4)


def test_c6_has_no_transfers():
    led = _ledger(F.cycle(6))
    assert led.transfers == () and led.final == led.initial
    assert [c for _, c in negative_elements(led)] == [-2] * 6
    assert "transfers" not in format_ledger(led)


def test_star_leaves_are_outside_the_rule_guard():
    # leaves have degree 1, so the degree window 2..6 never matches
    led = _ledger(F.star(7))
    assert led.transfers == ()
    assert led.final[V(0)] == 3
    assert all(led.final[V(i)] == -3 for i in range(1, 8))
    assert led.final[Element(Kind.FACE, 0)] == 10
    assert led.final_total == -8


def test_euler_total_and_disconnected_input():
    assert euler_charge_total(planarize(F.hexx())) == -8
    d = F.two_triangles()
    with pytest.raises(InvalidDrawingError):
        planarize(d)
    # bypass validation to reach the charge engine's own guard
    raw = PlanarizedGraph(d, d.rotations, tuple(trace_faces(d.rotations)))
    with pytest.raises(DisconnectedError):
        initial_charges(raw)
    with pytest.raises(DisconnectedError):
        euler_charge_total(raw)


def test_mismatched_graph_is_rejected():
    with pytest.raises(ValueError):
        apply_rules(planarize(F.hexx()), F.cycle_graph(6))


def test_ledger_text_footer():
    text = format_ledger(_ledger(F.hexx()))
    assert text.splitlines()[-1] == "initial -8 final -8"
    assert "R4 face:" in text and "2/3" in text


def _check_ledger(d):
    p = planarize(d)
    led = apply_rules(p, d.graph)
    assert led.initial_total == EULER_TOTAL
    assert led.final_total == led.initial_total
    assert led.replay() == led.final
    assert led.final == {x: expected_finals(p, d.graph).get(x, Q(0)) for x in led.final}
    assert apply_rules(p, d.graph).transfers == led.transfers
    for t in led.transfers:
        assert t.amount in RULE_AMOUNTS
        if t.rule == "R3":
            assert t.target.kind is Kind.FACE and len(p.faces[t.target.id]) == 3
        if t.rule == "R4":
            assert t.source.kind is Kind.FACE and len(p.faces[t.source.id]) >= 6
        if t.rule in ("R1", "R2", "R4"):
            assert Kind.CROSSING_VERTEX not in (t.source.kind, t.target.kind)
    order = ["R1", "R2", "R3", "R4"]
    keys = [(order.index(t.rule), t.source.sort_key(), t.target.sort_key()) for t in led.transfers]
    assert keys == sorted(keys)


def test_ledgers_on_fixtures(curated):
    for d in list(curated.values()) + [F.k4(), F.lemma2_case1_witness()]:
        _check_ledger(d)


@given(generated_instances())
def test_ledgers_on_generated(inst):
    _check_ledger(inst.drawing)
