from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from quadslope.fixtures import (
    bridged_gadgets, cube, fixture_graph, k4, petersen, prism, theta_122, two_diamonds,
)
from quadslope.graph import Graph, is_supercycle
from quadslope.structure import (
    StructureError, ceil_log2, certify_cut, enumerate_cubic_graphs, find_bridge_cut,
    find_hamiltonian_cycle, find_short_supercycle, find_suitable_m_cut, find_two_cut_split,
    fmax, girth_bound, girth_cycle, has_two_vertex_cut, random_cubic_graph, supercycle_bound,
)

BOUND_TABLE = (
    "[6,10,4,3] [8,12,4,4] [10,14,6,5] [12,16,6,6] [14,16,6,6] "
    "[16,16,6,4] [18,16,6,4] [20,18,6,5] [22,20,8,8] [24,20,8,6] "
    "[26,20,8,6] [28,22,8,7] [30,22,8,7] [32,24,8,8] [34,24,8,8] "
    "[36,24,8,8] [38,24,8,8] [40,24,8,8] [42,24,8,8]"
).split()


def test_ceil_log2_exact():
    from fractions import Fraction
    assert [ceil_log2(q) for q in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]
    assert ceil_log2(Fraction(13, 3)) == 3 and ceil_log2(Fraction(1, 2)) == -1
    assert ceil_log2(Fraction(11, 5)) == 2 and ceil_log2(Fraction(9, 4)) == 2


def test_girth_examples():
    assert girth_cycle(k4())[0] == 3
    g, cyc = girth_cycle(petersen())
    assert g == 5 and len(cyc) == 5 and girth_bound(10) == 6
    assert girth_cycle(theta_122())[0] == 3
    assert girth_cycle(fixture_graph("heawood"))[0] == 6


def test_girth_cycle_is_a_cycle():
    for gr in (petersen(), cube(), fixture_graph("tietze"), fixture_graph("heawood")):
        g, cyc = girth_cycle(gr)
        assert len(set(cyc)) == g
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert gr.has_edge(a, b)
        assert g == nx.girth(nx.Graph(gr.to_networkx()))


@pytest.mark.parametrize("graph, bound", [(k4(), 4), (petersen(), 8), (cube(), 7)])
def test_short_supercycle_examples(graph, bound):
    cert = find_short_supercycle(graph)
    assert cert.size <= bound
    assert is_supercycle(graph, cert.vertices)


def test_supercycle_requires_connected_cubic():
    with pytest.raises(StructureError):
        find_short_supercycle(theta_122())


def test_two_diamonds_m_cut():
    g = two_diamonds()
    seed = is_supercycle(g, [0, 1, 2, 3])
    cut = find_suitable_m_cut(g, seed)
    assert cut and cut.cut.cut_edges == ((2, 6), (3, 7))
    assert cut.cut.side_b == (4, 5, 6, 7) and cut.cut.size <= seed.size - 2
    assert certify_cut(g, cut.cut.side_b)


def test_petersen_seed_refused():
    g = petersen()
    seed = is_supercycle(g, [v for v in range(10) if v not in (0, 1)])
    assert seed and seed.size == 8
    ref = find_suitable_m_cut(g, seed)
    assert not ref and "2s-2=14" in ref.reasons[0]


def test_heawood_has_no_small_supercycle():
    g = fixture_graph("heawood")
    for k in range(4, 8):
        for s in itertools.combinations(range(g.n), k):
            assert not is_supercycle(g, s)
    seed = find_short_supercycle(g)
    assert seed.size == 8
    assert not find_suitable_m_cut(g, seed)


def test_bridge_cut_examples():
    cut = find_bridge_cut(bridged_gadgets())
    assert cut.cut.cut_edges == ((4, 9),)
    assert find_bridge_cut(k4()) is None
    assert find_bridge_cut(petersen()) is None


def test_two_cut_examples():
    cut = find_two_cut_split(two_diamonds())
    assert cut.cut.cut_edges == ((2, 6), (3, 7))
    assert find_two_cut_split(fixture_graph("k33")) is None
    assert find_two_cut_split(fixture_graph("tietze")) is None


def test_two_cut_agrees_with_vertex_cut_oracle():
    for n in (6, 8, 10):
        for g in enumerate_cubic_graphs(n):
            if find_bridge_cut(g) is None:
                assert (find_two_cut_split(g) is not None) == has_two_vertex_cut(g)
                assert has_two_vertex_cut(g) == (nx.node_connectivity(nx.Graph(g.to_networkx())) == 2)


def _brute_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        return False
    for perm in itertools.permutations(range(1, g.n)):
        cyc = (0,) + perm
        if all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])):
            return True
    return False


def _check_ham(g: Graph, cyc) -> None:
    assert sorted(cyc) == list(range(g.n))
    assert all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def test_hamiltonian_examples():
    _check_ham(k4(), find_hamiltonian_cycle(k4()))
    assert find_hamiltonian_cycle(petersen()) is None
    h = fixture_graph("heawood")
    _check_ham(h, find_hamiltonian_cycle(h))


def test_hamiltonian_agrees_with_brute_force():
    rng = random.Random(3)
    graphs = [g for n in (4, 6, 8) for g in enumerate_cubic_graphs(n)]
    for _ in range(60):
        n = rng.randint(3, 8)
        pairs = list(itertools.combinations(range(n), 2))
        graphs.append(Graph(n, [p for p in pairs if rng.random() < 0.5]))
    for g in graphs:
        cyc = find_hamiltonian_cycle(g)
        assert (cyc is not None) == _brute_hamiltonian(g)
        if cyc is not None:
            _check_ham(g, cyc)


def test_fmax_against_table():
    assert [str(fmax(n)) for n in range(6, 43, 2)] == BOUND_TABLE
    assert fmax(6).as_tuple() == (6, 10, 4, 3)
    assert fmax(22).as_tuple() == (22, 20, 8, 8)
    for n in range(18, 43, 2):
        assert fmax(n).two_s_minus_2 < n


def test_enumeration_counts_small():
    counts = [sum(1 for _ in enumerate_cubic_graphs(n)) for n in (4, 6, 8)]
    assert counts == [1, 2, 5]
    six = list(enumerate_cubic_graphs(6))
    refs = [nx.complete_bipartite_graph(3, 3), nx.Graph(prism().to_networkx())]
    for r in refs:
        assert sum(nx.is_isomorphic(nx.Graph(g.to_networkx()), r) for g in six) == 1


def test_enumeration_rejects_unsupported_sizes():
    with pytest.raises(ValueError):
        list(enumerate_cubic_graphs(7))
    with pytest.raises(ValueError):
        list(enumerate_cubic_graphs(14))


def test_random_cubic_graph_is_connected_simple_cubic():
    rng = random.Random(11)
    for n in (4, 10, 20):
        g = random_cubic_graph(n, rng)
        assert all(d == 3 for d in g.degrees())
        assert nx.is_connected(nx.Graph(g.to_networkx()))


def test_bounds_hold_on_random_corpus():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.choice(range(12, 31, 2))
        g = random_cubic_graph(n, rng)
        gi = girth_cycle(g)[0]
        assert gi <= girth_bound(n)
        cert = find_short_supercycle(g)
        assert cert.size <= supercycle_bound(n, gi)
        res = find_suitable_m_cut(g, cert)
        if res:
            assert res.cut.is_m_cut and res.cut.size <= cert.size - 2
            assert certify_cut(g, res.cut.side_a)
            assert certify_cut(g, res.cut.side_b)


def test_enumeration_count_twelve():
    assert sum(1 for _ in enumerate_cubic_graphs(12)) == 85
