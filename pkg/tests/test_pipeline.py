from __future__ import annotations

import json
import random

import pytest

from quadslope.drawing import Drawing, verify_drawing
from quadslope.fixtures import (
    bridged_gadgets, cube, cycle, fixture_graph, k4, petersen, petersen_drawing, prism, two_diamonds,
)
from quadslope.graph import disjoint_union, is_isomorphic
from quadslope.pipeline import (
    PipelineError, PipelineTrace, SidePart, compose_via_m_cut, draw_cubic, draw_sides, place_components,
)
from quadslope.structure import find_two_cut_split, random_cubic_graph
from quadslope.symgeom import BASIC, VERTICAL, Point, SymbolPool, slope_between


def test_k4_is_unit_square_with_diagonals():
    d, trace = draw_cubic(k4())
    assert trace.branch == "fixture" and trace.certificates == {"fixture": "k4"}
    assert set(d.pos) == {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}
    assert set(d.edge_slopes().values()) == set(BASIC)


def test_petersen_uses_stored_drawing():
    g = petersen()
    d, trace = draw_cubic(g)
    assert trace.branch == "fixture" and trace.certificates["fixture"] == "petersen"
    assert set(d.pos) == set(petersen_drawing().pos)


def test_reference_drawing_named_petersen_is_not_petersen():
    assert not is_isomorphic(fixture_graph("petersen"), petersen())
    d, trace = draw_cubic(fixture_graph("petersen"))
    assert verify_drawing(d.graph, d).ok


def test_tietze_uses_stored_drawing():
    _, trace = draw_cubic(fixture_graph("tietze"))
    assert trace.certificates == {"fixture": "tietze"}


def test_two_diamonds_two_cut_branch():
    g = two_diamonds()
    d, trace = draw_cubic(g)
    assert trace.branch == "two_cut"
    assert trace.certificates["cut_edges"] == [[2, 6], [3, 7]]
    assert verify_drawing(g, d).ok
    for a, b in ((2, 6), (3, 7)):
        assert slope_between(d.pos[a], d.pos[b]) == VERTICAL
    top_a = max(d.pos[v].y for v in (0, 1, 2, 3))
    assert all(d.pos[v].y > top_a for v in (4, 5, 6, 7))


def test_bridge_branch():
    d, trace = draw_cubic(bridged_gadgets())
    assert trace.branch == "bridge" and trace.certificates["cut_edges"] == [[4, 9]]
    assert slope_between(d.pos[4], d.pos[9]) == VERTICAL


def test_small_search_records_hamiltonian_cycle():
    _, trace = draw_cubic(cube())
    assert trace.branch == "small_search"
    cyc = trace.certificates["hamiltonian_cycle"]
    assert sorted(cyc) == list(range(8))


def test_compose_contract():
    g = two_diamonds()
    cut = find_two_cut_split(g)
    pool = SymbolPool()
    part_a, part_b = draw_sides(g, cut, pool)
    d = compose_via_m_cut(g, cut, part_a, part_b, pool)
    assert len(g.edges()) == part_a.graph.m + part_b.graph.m + cut.cut.size
    index_a = {v: i for i, v in enumerate(part_a.old_ids)}
    index_b = {v: i for i, v in enumerate(part_b.old_ids)}
    for a, b in cut.cut.cut_edges:
        assert slope_between(d.pos[a], d.pos[b]) == VERTICAL
        # turning B by pi sends -x back to x exactly
        assert d.pos[b].x == -part_b.xa[index_b[b]] == part_a.xa[index_a[a]]
    assert verify_drawing(g, d).ok


def test_compose_rejects_unmirrored_assignments():
    g = two_diamonds()
    cut = find_two_cut_split(g)
    pool = SymbolPool()
    part_a, part_b = draw_sides(g, cut, pool)
    bad = SidePart(part_b.graph, part_b.old_ids, {k: -v for k, v in part_b.xa.items()}, part_b.drawing)
    with pytest.raises(PipelineError):
        compose_via_m_cut(g, cut, part_a, bad, pool)


def test_place_components():
    one = draw_cubic(k4())[0]
    assert place_components([one]) == one
    two = place_components([one, one])
    assert len(set(two.pos)) == 8 and verify_drawing(two.graph, two).ok
    mixed = place_components([one, petersen_drawing()])
    assert verify_drawing(mixed.graph, mixed).ok


def test_disconnected_branch():
    g = disjoint_union([k4(), prism(), petersen()])
    d, trace = draw_cubic(g)
    assert trace.branch == "disconnected"
    assert [c.branch for c in trace.children] == ["fixture", "small_search", "fixture"]
    assert verify_drawing(g, d).ok
    json.dumps(trace.to_json())


def test_not_cubic():
    with pytest.raises(PipelineError, match="not cubic"):
        draw_cubic(cycle(5))


def test_trace_rejects_unknown_branch():
    with pytest.raises(ValueError):
        PipelineTrace("guess", 4)


def test_large_graphs_avoid_small_search():
    rng = random.Random(17)
    for _ in range(6):
        g = random_cubic_graph(rng.choice((18, 26, 30)), rng)
        d, trace = draw_cubic(g)
        assert "small_search" not in trace.branches()
        assert trace.branch in ("bridge", "two_cut", "big_mcut")
        assert verify_drawing(g, d).ok
        assert all(isinstance(p, SidePart) for p in trace.all_parts())


def test_drawing_output_type():
    d, _ = draw_cubic(k4())
    assert isinstance(d, Drawing) and d.slope_set == BASIC


@pytest.mark.parametrize("name", ["k33", "heawood"])
def test_hamiltonian_reference_graphs_by_search(name):
    g = fixture_graph(name)
    d, trace = draw_cubic(g)
    assert trace.branch == "small_search" and trace.certificates["hamiltonian_cycle"] is not None
    assert verify_drawing(g, d).ok


def test_pipeline_outputs_realize_without_collisions():
    from quadslope.symgeom import numeric_realize
    rng = random.Random(23)
    for _ in range(10):
        d, _ = draw_cubic(random_cubic_graph(rng.choice((20, 24, 32)), rng))
        pts = numeric_realize(d.pos)
        assert len(set(pts)) == len(pts)
