"""Drawings and their exact validity check."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .graph import Graph
from .symgeom import BASIC, GeometryError, Point, Slope, SlopeSet, cross, dot, slope_between


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    pos: Tuple[Point, ...]
    slope_set: SlopeSet = BASIC

    def __post_init__(self):
        object.__setattr__(self, "pos", tuple(self.pos))

    def edge_slopes(self) -> Dict[Tuple[int, int], Slope]:
        return {(u, v): slope_between(self.pos[u], self.pos[v]) for u, v in self.graph.edges()}

    def moved(self, v: int, p: Point) -> "Drawing":
        pos = list(self.pos)
        pos[v] = p
        return Drawing(self.graph, pos, self.slope_set)


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    witness: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass
class Report:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return sorted({v.kind for v in self.violations})

    def add(self, kind: str, detail: str, *witness: int) -> None:
        self.violations.append(Violation(kind, detail, tuple(witness)))

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def _interior_hits(graph: Graph, pos: Sequence[Point], slopes: Dict[Tuple[int, int], Slope]):
    """Yield ``(w, u, v)`` for every vertex ``w`` strictly inside edge ``uv``."""
    lines: Dict[Slope, Dict] = {}
    for (u, v), s in slopes.items():
        if s is None or s in lines:
            continue
        groups = defaultdict(list)
        d = s.direction()
        for i, p in enumerate(pos):
            groups[cross(d, p)].append(i)
        lines[s] = groups
    for (u, v), s in slopes.items():
        if s is None:
            continue
        d = s.direction()
        pu, pv = pos[u], pos[v]
        lo, hi = sorted((dot(d, pu), dot(d, pv)))
        for w in lines[s][cross(d, pu)]:
            if w in (u, v):
                continue
            t = dot(d, pos[w])
            if lo < t < hi:
                yield w, u, v


def verify_drawing(graph: Graph, drawing: Drawing, slopes: SlopeSet = BASIC) -> Report:
    """Exact straight-line validity of ``drawing`` using only ``slopes``."""
    rep = Report()
    pos = drawing.pos
    if len(pos) != graph.n:
        rep.add("placement", f"{len(pos)} points for {graph.n} vertices")
        return rep
    seen: Dict[Point, int] = {}
    for v, p in enumerate(pos):
        if p in seen:
            rep.add("distinct", f"vertices {seen[p]} and {v} coincide at {p}", seen[p], v)
        else:
            seen[p] = v
    if not rep.ok:
        return rep
    edge_slopes = {}
    for u, v in graph.edges():
        try:
            s = slope_between(pos[u], pos[v])
        except GeometryError:
            rep.add("distinct", f"edge {u}-{v} has coincident ends", u, v)
            continue
        edge_slopes[(u, v)] = s
        if s is None:
            rep.add("slope", f"edge {u}-{v} has no rational slope", u, v)
        elif s not in slopes:
            rep.add("slope", f"edge {u}-{v} has slope {s}", u, v)
    for w, u, v in _interior_hits(graph, pos, edge_slopes):
        rep.add("interior", f"vertex {w} lies inside edge {u}-{v}", w, u, v)
    return rep
