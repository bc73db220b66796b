from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from quadslope.fixtures import cycle, k4, petersen, theta_122
from quadslope.graph import (
    Graph, GraphFormatError, classify, connected_components, contract, disjoint_union, encode_graph6,
    format_edge_list, is_supercycle, parse_edge_list, parse_graph6,
)


def test_graph6_examples():
    assert parse_graph6("C~") == k4()
    assert parse_graph6(b"Cl") == cycle(4)
    empty = parse_graph6("@")
    assert empty.n == 1 and empty.m == 0
    assert parse_graph6(">>graph6<<C~\n") == k4()


@pytest.mark.parametrize("bad", ["", "C", "C\x7f", "C~~", "~"])
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_roundtrip_all_graphs_up_to_six_vertices():
    for n in range(0, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            assert parse_graph6(encode_graph6(g)) == g


def test_graph6_roundtrip_on_seven_and_eight_vertices():
    # all isomorphism classes on 7 vertices, every single-edge graph, and random masks on 8
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 7:
            g = Graph.from_networkx(h)
            assert parse_graph6(encode_graph6(g)) == g
    rng = random.Random(8)
    for n in (7, 8):
        pairs = list(itertools.combinations(range(n), 2))
        masks = [1 << i for i in range(len(pairs))] + [rng.getrandbits(len(pairs)) for _ in range(3000)]
        for mask in masks:
            g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            enc = encode_graph6(g)
            assert parse_graph6(enc) == g
            assert enc == nx.to_graph6_bytes(nx.Graph(g.to_networkx()), header=False).strip()


def test_graph6_large_size_prefix():
    g = Graph(70, [(i, i + 1) for i in range(69)])
    assert parse_graph6(encode_graph6(g)) == g


def test_edge_list_examples():
    g = parse_edge_list("2 1\n0 1")
    assert g.n == 2 and g.edges() == ((0, 1),)
    assert parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3") == k4()
    for bad in ("3 1\n0 0", "3 2\n0 1\n1 0", "2 1\n0 5", "x", "3 2\n0 1"):
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)
    assert parse_edge_list(format_edge_list(petersen())) == petersen()


def test_classify_examples():
    c = classify(k4())
    assert c.is_cubic and not c.is_subcubic
    c = classify(cycle(5))
    assert c.is_cycle and c.is_subcubic
    c = classify(petersen())
    assert c.is_cubic and c.is_connected


def test_components():
    assert len(connected_components(k4())) == 1
    assert [len(c) for c in connected_components(disjoint_union([k4(), k4()]))] == [4, 4]
    assert connected_components(Graph(3)) == [(0,), (1,), (2,)]


def test_supercycle_examples():
    cert = is_supercycle(k4(), range(4))
    assert cert and cert.size == 4
    ref = is_supercycle(cycle(6), range(6))
    assert not ref and "all induced degrees are two" in ref.reasons[0]
    assert is_supercycle(theta_122(), range(4))


@given(st.integers(4, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                            .filter(lambda e: e[0] != e[1]), max_size=14),
                        st.sets(st.integers(0, n - 1), min_size=1))))
def test_supercycle_acceptance_implies_extra_edge(data):
    n, edges, members = data
    g = Graph(n, {(min(e), max(e)) for e in edges})
    cert = is_supercycle(g, members)
    if cert:
        sub, _ = g.induced(members)
        assert sub.m >= len(members) + 1
        assert cert.size >= 4


def test_cubic_implies_even():
    for n in range(1, 7):
        for mask in range(0, 1 << (n * (n - 1) // 2), 7):
            pairs = list(itertools.combinations(range(n), 2))
            g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if classify(g).is_cubic:
                assert n % 2 == 0


def test_parallel_edges_only_when_allowed():
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)], allows_parallel=True)
    mg, mapping = contract(theta_122(), [0, 1, 2])
    assert mapping[3] == 1 and mg.edges() == ((0, 1), (0, 1))


def test_adjacency_symmetric():
    g = petersen()
    for u in range(g.n):
        for w in g.adj[u]:
            assert g.adj[w].count(u) == g.adj[u].count(w)
