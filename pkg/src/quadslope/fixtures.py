"""Hand-made basic-slope drawings of four classical cubic graphs, and small named graphs.

Vertex ``i`` of a fixture is its ``(i+1)``-th listed point.  The drawing stored
as ``petersen`` shows a girth-4 cubic graph on ten vertices rather than the
Petersen graph; :func:`petersen_drawing` is a checked drawing of the real one.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .drawing import Drawing
from .graph import Graph
from .symgeom import BASIC, Point

_REFERENCE: Dict[str, Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]] = {
    "petersen": (
        [(1, 0), (0, 1), (2, 1), (4, 1), (3, 0), (0, 2), (1, 3), (2, 3), (3, 3), (4, 2)],
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 7), (7, 8), (8, 9), (9, 10), (10, 6), (6, 7),
         (2, 6), (3, 8), (4, 10), (5, 9)],
    ),
    "k33": (
        [(1, 0), (3, 0), (4, 1), (3, 2), (1, 2), (0, 1)],
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4), (2, 5), (3, 6)],
    ),
    "heawood": (
        [(0, 2), (1, 1), (2, 0), (3, 0), (4, 0), (6, 2), (6, 3), (5, 3), (0, 4), (3, 4), (6, 4),
         (1, 9), (4, 9), (5, 9)],
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (3, 8), (8, 7), (7, 6),
         (9, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 9),
         (1, 9), (2, 12), (4, 10), (5, 13), (7, 11), (8, 14)],
    ),
    "tietze": (
        [(0, 1), (0, 2), (1, 2), (3, 2), (4, 2), (4, 1), (3, 0), (2, 0), (1, 0), (0, 3), (4, 3), (2, 5)],
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 9), (9, 8), (8, 7), (7, 6),
         (10, 11), (11, 12), (12, 10), (9, 4), (7, 3), (2, 10), (8, 12), (5, 11)],
    ),
}

FIXTURE_NAMES = tuple(_REFERENCE)


def fixture_graph(name: str) -> Graph:
    try:
        pts, edges = _REFERENCE[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}") from None
    return Graph(len(pts), [(u - 1, v - 1) for u, v in edges])


def fixture_drawing(name: str) -> Drawing:
    """The reference drawing ``name`` with exact integer coordinates."""
    g = fixture_graph(name)
    pts, _ = _REFERENCE[name]
    return Drawing(g, [Point(x, y) for x, y in pts], BASIC)


# named graphs ----------------------------------------------------------

def k4() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + inner + [(i, i + 5) for i in range(5)])


# Petersen graph on an 8 x 8 grid, as labelled by networkx.petersen_graph
_PETERSEN_EDGES = [(0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8), (4, 9),
                   (5, 7), (5, 8), (6, 8), (6, 9), (7, 9)]
_PETERSEN_POINTS = [(0, 0), (1, 0), (7, 6), (7, 3), (3, 3), (0, 2), (1, 7), (4, 6), (6, 2), (3, 7)]


def petersen_drawing() -> Drawing:
    g = Graph(10, _PETERSEN_EDGES)
    return Drawing(g, [Point(x, y) for x, y in _PETERSEN_POINTS], BASIC)


def prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def cube() -> Graph:
    return Graph(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def theta_122() -> Graph:
    """Two poles joined by internally disjoint paths of lengths 1, 2 and 2."""
    return Graph(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])


def two_diamonds() -> Graph:
    """Two copies of K4 minus an edge, joined across their degree-two vertices."""
    diamond = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
    edges = diamond + [(u + 4, v + 4) for u, v in diamond] + [(2, 6), (3, 7)]
    return Graph(8, edges)


def bridged_gadgets() -> Graph:
    """Two 5-vertex gadgets (diamond plus apex) whose apexes are joined by a bridge."""
    gadget = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
    edges = gadget + [(u + 5, v + 5) for u, v in gadget] + [(4, 9)]
    return Graph(10, edges)
