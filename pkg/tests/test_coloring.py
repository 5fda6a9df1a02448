import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import bipartite_graphs, graphs
from onechroma import fixtures as F
from onechroma.coloring import (
    ColorClass,
    CriticalVerdict,
    EdgeColoring,
    exact_chromatic_index,
    is_critical,
    verify_coloring,
    vizing_color,
)
from onechroma.graph import Graph
from oracles import chromatic_index_bruteforce, from_nx


def _exact(g):
    res = exact_chromatic_index(g)
    assert res.known
    assert verify_coloring(g, res.witness).ok
    assert res.witness.k == res.chromatic_index
    return res


def test_vizing_examples():
    c = vizing_color(F.star_graph(7))
    assert c.k == 7 and verify_coloring(F.star_graph(7), c).ok
    assert vizing_color(F.cycle_graph(5)).k <= 3
    pet = F.petersen()
    c = vizing_color(pet)
    assert c.k <= 4 and verify_coloring(pet, c).ok


def test_vizing_rejects_empty_edge_set():
    with pytest.raises(ValueError):
        vizing_color(Graph(3))


def test_vizing_is_deterministic():
    g = F.petersen()
    assert vizing_color(g) == vizing_color(g)


def test_verify_examples():
    c4 = F.cycle_graph(4)
    check = verify_coloring(c4, EdgeColoring({e: 0 for e in c4.edges}, 1))
    assert not check.ok and len(check.conflicts) == 4
    edge = Graph(2, [(0, 1)])
    assert verify_coloring(edge, EdgeColoring({(0, 1): 0}, 1)).ok
    with pytest.raises(ValueError, match="domain"):
        verify_coloring(c4, EdgeColoring({(0, 1): 0}, 1))


def test_from_assignment_compacts_colors():
    c = EdgeColoring.from_assignment({(1, 0): 5, (1, 2): 9})
    assert c.colors == {(0, 1): 0, (1, 2): 1} and c.k == 2


def test_exact_examples():
    k3 = _exact(F.complete(3))
    assert (k3.chromatic_index, k3.klass) == (3, ColorClass.TWO)
    hexx = _exact(F.hexx().graph)
    assert (hexx.chromatic_index, hexx.klass) == (3, ColorClass.ONE)
    pet = _exact(F.petersen())
    assert (pet.chromatic_index, pet.klass) == (4, ColorClass.TWO)
    assert _exact(F.cycle_graph(5)).chromatic_index == 3
    assert _exact(Graph(4)).chromatic_index == 0


def test_exact_agrees_with_oracle_on_named_graphs():
    named = [nx.petersen_graph(), nx.complete_graph(5), nx.complete_graph(6), nx.cubical_graph(),
             nx.dodecahedral_graph(), nx.heawood_graph(), nx.cycle_graph(7), nx.wheel_graph(6)]
    for h in named:
        g = from_nx(h)
        assert _exact(g).chromatic_index == chromatic_index_bruteforce(g)


def test_budget_exhaustion_is_unknown():
    res = exact_chromatic_index(F.petersen(), budget=1)
    assert res.klass is ColorClass.UNKNOWN and res.chromatic_index is None
    assert (res.lower, res.upper) == (3, 4)
    assert is_critical(F.petersen(), budget=1).verdict is CriticalVerdict.UNKNOWN


def test_overfull_graphs_are_class_two_without_search():
    for n in (3, 5, 7, 9):
        res = exact_chromatic_index(F.complete(n), budget=1)
        assert res.klass is ColorClass.TWO and res.chromatic_index == n


def test_is_critical_examples():
    assert is_critical(F.cycle_graph(5)).verdict is CriticalVerdict.CRITICAL
    c6 = is_critical(F.cycle_graph(6))
    assert c6.verdict is CriticalVerdict.NOT_CRITICAL and c6.reason == "class ONE"
    assert is_critical(F.complete(3)).verdict is CriticalVerdict.CRITICAL
    assert is_critical(F.cycle_graph(7)).verdict is CriticalVerdict.CRITICAL
    assert is_critical(F.complete(4)).verdict is CriticalVerdict.NOT_CRITICAL
    # K5 - e is still overfull
    k5 = is_critical(F.complete(5))
    assert k5.verdict is CriticalVerdict.NOT_CRITICAL and k5.chromatic_index == 5
    pet = is_critical(F.petersen())
    assert pet.verdict is CriticalVerdict.NOT_CRITICAL and pet.failing_edge is not None


def test_monotonicity_on_fixtures(curated):
    graphs_ = [d.graph for d in curated.values()] + [F.petersen(), F.k4().graph]
    for g in graphs_:
        base = _exact(g).chromatic_index
        for e in g.edges:
            assert _exact(g.remove_edge(*e)).chromatic_index in (base, base - 1)


@given(graphs(max_n=9))
def test_exact_matches_backtracking_oracle(g):
    res = exact_chromatic_index(g)
    assert res.chromatic_index == chromatic_index_bruteforce(g)
    assert res.chromatic_index >= g.max_degree()
    assert (res.klass is ColorClass.ONE) == (res.chromatic_index == g.max_degree())


@given(bipartite_graphs())
def test_bipartite_graphs_are_class_one(g):
    assert exact_chromatic_index(g).chromatic_index == g.max_degree()


@given(graphs(max_n=30))
def test_vizing_property(g):
    if g.num_edges == 0:
        return
    c = vizing_color(g)
    assert verify_coloring(g, c).ok
    assert c.k <= g.max_degree() + 1
    assert c.k == len(set(c.colors.values()))


def test_vizing_on_random_dense_graphs():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(20, 50)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        c = vizing_color(g)
        assert verify_coloring(g, c).ok and c.k <= g.max_degree() + 1
