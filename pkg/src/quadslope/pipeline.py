"""Basic-slope drawings of arbitrary cubic graphs.

Dispatch for a connected cubic graph: bridge, then a two-edge cut, then a
suitable M-cut grown from a short supercycle (always available from 18
vertices on); smaller graphs without such a cut fall back to the stored
reference drawings or to a direct search.  Split graphs are drawn side by side
through :func:`compose_via_m_cut`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .drawer import draw_subcubic, search_drawing, verify_subcubic_contract
from .drawing import Drawing, verify_drawing
from .fixtures import fixture_drawing, k4, petersen_drawing
from .graph import Graph, classify, connected_components, disjoint_union, isomorphism
from .structure import (
    SuitableMCut,
    find_bridge_cut,
    find_hamiltonian_cycle,
    find_short_supercycle,
    find_suitable_m_cut,
    find_two_cut_split,
)
from .symgeom import BASIC, Point, SymbolPool, SymScalar, rotate_pi

log = logging.getLogger(__name__)

BRANCHES = ("disconnected", "bridge", "two_cut", "big_mcut", "small_search", "fixture")
CUT_BRANCHES = ("bridge", "two_cut", "big_mcut")

__all__ = [
    "PipelineError",
    "PipelineTrace",
    "SidePart",
    "compose_via_m_cut",
    "draw_cubic",
    "place_components",
    "verify_drawing",
]


class PipelineError(ValueError):
    """Input is not a cubic graph, or component drawings are inconsistent."""


@dataclass
class SidePart:
    """One side of a split: induced subgraph, original ids, x-assignment, drawing."""

    graph: Graph
    old_ids: List[int]
    xa: Dict[int, SymScalar]
    drawing: Drawing


@dataclass
class PipelineTrace:
    branch: str
    n: int
    certificates: Dict[str, Any] = field(default_factory=dict)
    children: List["PipelineTrace"] = field(default_factory=list)
    parts: List[SidePart] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"unknown branch {self.branch!r}")

    def branches(self) -> List[str]:
        """This branch and all nested ones, depth first."""
        out = [self.branch]
        for c in self.children:
            out.extend(c.branches())
        return out

    def all_parts(self) -> List[SidePart]:
        out = list(self.parts)
        for c in self.children:
            out.extend(c.all_parts())
        return out

    def to_json(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {"branch": self.branch, "n": self.n, "certificates": self.certificates}
        if self.children:
            doc["components"] = [c.to_json() for c in self.children]
        return doc


def _cut_certificate(cut: SuitableMCut) -> Dict[str, Any]:
    return {
        "cut_edges": [list(e) for e in cut.cut.cut_edges],
        "side_a": list(cut.cut.side_a),
        "side_b": list(cut.cut.side_b),
    }


def _check_consistent(trace: PipelineTrace) -> None:
    c = trace.certificates
    if trace.branch in CUT_BRANCHES and "cut_edges" not in c:
        raise AssertionError("cut branch without a cut certificate")
    if trace.branch == "fixture" and "fixture" not in c:
        raise AssertionError("fixture branch without a fixture name")
    if trace.branch == "disconnected" and len(trace.children) < 2:
        raise AssertionError("disconnected branch needs at least two components")


# composition -------------------------------------------------------------

def _side(g: Graph, vertices: Sequence[int], symbol_of: Dict[int, SymScalar]) -> Tuple[Graph, List[int], Dict[int, SymScalar]]:
    sub, old = g.induced(vertices)
    xa = {i: symbol_of[v] for i, v in enumerate(old) if sub.degree(i) <= 2}
    return sub, old, xa


def draw_sides(g: Graph, cut: SuitableMCut, pool: SymbolPool, *, budget=None, seed: int = 0) -> Tuple[SidePart, SidePart]:
    """Draw both sides of a suitable M-cut with mirrored x-prescriptions."""
    symbol_of: Dict[int, SymScalar] = {}
    for a, b in cut.cut.cut_edges:
        s = pool.fresh()
        symbol_of[a] = SymScalar.symbol(s)
        symbol_of[b] = SymScalar.symbol(s, -1)
    parts = []
    for side in (cut.cut.side_a, cut.cut.side_b):
        sub, old, xa = _side(g, side, symbol_of)
        d = draw_subcubic(sub, xa, budget=budget, seed=seed, pool=pool)
        parts.append(SidePart(sub, old, xa, d))
    return parts[0], parts[1]


def compose_via_m_cut(g: Graph, cut: SuitableMCut, part_a: SidePart, part_b: SidePart,
                      pool: Optional[SymbolPool] = None) -> Drawing:
    """Turn side B by pi, lift it above side A, and join the cut edges vertically."""
    index_a = {v: i for i, v in enumerate(part_a.old_ids)}
    index_b = {v: i for i, v in enumerate(part_b.old_ids)}
    for a, b in cut.cut.cut_edges:
        if a not in index_a or b not in index_b:
            raise PipelineError(f"cut edge {a}-{b} does not cross the given sides")
        xa, xb = part_a.xa.get(index_a[a]), part_b.xa.get(index_b[b])
        if xa is None or xb is None or xa != -xb:
            raise PipelineError(f"x-assignments of cut edge {a}-{b} are not mirrored")
    for part in (part_a, part_b):
        rep = verify_subcubic_contract(part.graph, part.xa, part.drawing)
        if not rep.ok:
            raise PipelineError(f"side drawing violates the subcubic contract:\n{rep}")
    pts_a = list(part_a.drawing.pos)
    pts_b = rotate_pi(part_b.drawing.pos)
    if pool is None:
        pool = SymbolPool.above([c for p in pts_a + pts_b for c in (p.x, p.y)])
    else:
        pool.reserve_above([c for p in pts_a + pts_b for c in (p.x, p.y)])
    lift = SymScalar.symbol(pool.fresh())
    pos: List[Optional[Point]] = [None] * g.n
    for i, v in enumerate(part_a.old_ids):
        pos[v] = pts_a[i]
    for i, v in enumerate(part_b.old_ids):
        pos[v] = Point(pts_b[i].x, pts_b[i].y + lift)
    return Drawing(g, pos, BASIC)


def place_components(drawings: Sequence[Drawing], pool: Optional[SymbolPool] = None) -> Drawing:
    """Disjoint union of drawings, the ``k``-th shifted by ``(k*T, k*T)`` for a fresh dominant ``T``."""
    if len(drawings) == 1:
        return drawings[0]
    coords = [c for d in drawings for p in d.pos for c in (p.x, p.y)]
    if pool is None:
        pool = SymbolPool.above(coords)
    else:
        pool.reserve_above(coords)
    far = pool.fresh()
    pos: List[Point] = []
    for k, d in enumerate(drawings):
        shift = SymScalar.symbol(far, k) if k else SymScalar()
        pos.extend(Point(p.x + shift, p.y + shift) for p in d.pos)
    return Drawing(disjoint_union([d.graph for d in drawings]), pos, BASIC)


# dispatch ----------------------------------------------------------------

def _unit_square_k4() -> Drawing:
    return Drawing(k4(), [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)], BASIC)


_SEARCH_FIXTURES = {
    "k4": _unit_square_k4,
    "petersen": petersen_drawing,
    "tietze": lambda: fixture_drawing("tietze"),
}


def _match_fixture(g: Graph) -> Optional[Tuple[str, Drawing]]:
    for name, make in _SEARCH_FIXTURES.items():
        ref = make()
        mapping = isomorphism(g, ref.graph)
        if mapping is not None:
            return name, Drawing(g, [ref.pos[mapping[v]] for v in range(g.n)], BASIC)
    return None


def _via_cut(g: Graph, branch: str, cut: SuitableMCut, pool: SymbolPool, budget, seed) -> Tuple[Drawing, PipelineTrace]:
    part_a, part_b = draw_sides(g, cut, pool, budget=budget, seed=seed)
    drawing = compose_via_m_cut(g, cut, part_a, part_b, pool)
    trace = PipelineTrace(branch, g.n, _cut_certificate(cut), parts=[part_a, part_b])
    return drawing, trace


def _draw_connected(g: Graph, pool: SymbolPool, budget, seed) -> Tuple[Drawing, PipelineTrace]:
    cut = find_bridge_cut(g)
    if cut is not None:
        return _via_cut(g, "bridge", cut, pool, budget, seed)
    cut = find_two_cut_split(g)
    if cut is not None:
        return _via_cut(g, "two_cut", cut, pool, budget, seed)
    seed_cycle = find_short_supercycle(g)
    res = find_suitable_m_cut(g, seed_cycle)
    if res:
        drawing, trace = _via_cut(g, "big_mcut", res, pool, budget, seed)
        trace.certificates["supercycle"] = list(seed_cycle.vertices)
        return drawing, trace
    if g.n >= 18:
        raise AssertionError(f"no suitable M-cut on {g.n} vertices: {res.reasons}")
    matched = _match_fixture(g)
    if matched is not None:
        name, drawing = matched
        return drawing, PipelineTrace("fixture", g.n, {"fixture": name})
    pts, nodes = search_drawing(g, contract=False, budget=budget, seed=seed, pool=pool)
    ham = find_hamiltonian_cycle(g)
    cert = {"search_nodes": nodes, "hamiltonian_cycle": ham}
    return Drawing(g, pts, BASIC), PipelineTrace("small_search", g.n, cert)


def draw_cubic(g: Graph, *, budget: Optional[int] = None, seed: int = 0,
               pool: Optional[SymbolPool] = None) -> Tuple[Drawing, PipelineTrace]:
    """Draw a cubic graph with the four basic slopes; the result is re-verified."""
    if g.allows_parallel and len(set(g.edges())) != g.m:
        raise PipelineError("multigraphs are not supported")
    if not classify(g).is_cubic:
        raise PipelineError("not cubic")
    pool = pool or SymbolPool()
    comps = connected_components(g)
    if len(comps) > 1:
        drawings, children = [], []
        for comp in comps:
            sub, _ = g.induced(comp)
            d, t = draw_cubic(sub, budget=budget, seed=seed, pool=pool)
            drawings.append(d)
            children.append(t)
        union = place_components(drawings, pool)
        order = [v for comp in comps for v in comp]
        pos: List[Optional[Point]] = [None] * g.n
        for i, v in enumerate(order):
            pos[v] = union.pos[i]
        drawing = Drawing(g, pos, BASIC)
        trace = PipelineTrace("disconnected", g.n, {"components": [list(c) for c in comps]}, children)
    else:
        drawing, trace = _draw_connected(g, pool, budget, seed)
    _check_consistent(trace)
    rep = verify_drawing(g, drawing, BASIC)
    if not rep.ok:
        raise AssertionError(f"pipeline produced an invalid drawing ({trace.branch}):\n{rep}")
    log.debug("drew n=%d via %s", g.n, trace.branch)
    return drawing, trace
