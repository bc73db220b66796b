"""Drawings of subcubic components with prescribed x-coordinates.

A drawing here satisfies, for the degree <= 2 vertices ``v_i`` with
prescribed signed symbols ``x_i``:

1. ``x(v_i) = x_i`` exactly;
2. every edge has one of the four basic slopes;
3. no vertex is to the North of a degree-two vertex;
4. no vertex is to the North or Northwest of a degree-one vertex.

The drawings are found by depth-first search over basic-slope assignments.
Each assigned slope contributes one linear equation between endpoint
coordinates; the system is kept in reduced form over affine forms whose
constants are symbolic scalars.  At a complete assignment, every remaining
free coordinate becomes ``+-F`` for a fresh dominant symbol ``F``; the signs
are the only choice left, and each order condition (North, Northwest,
betweenness on a line) fixes one sign or the parity of two, so the leaf is a
linear system over GF(2).  Nothing the search produces is trusted: every
result is re-verified exactly before it is returned.
"""

from __future__ import annotations

import os
import random
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .drawing import Drawing, Report, Violation, verify_drawing
from .graph import Graph, classify, connected_components
from .symgeom import (
    BASIC,
    BASIC_SLOPES,
    UNIT,
    VERTICAL,
    Point,
    Slope,
    SymbolPool,
    SymScalar,
    is_north,
    is_northwest,
    slope_between,
)

DEFAULT_BUDGET = 10 ** 7

XAssignment = Dict[int, SymScalar]
Form = Dict[int, Fraction]  # keys >= 0: basis symbols; keys < 0: unknowns


class DrawerError(ValueError):
    """Input violates the drawer's preconditions."""


class SearchExhausted(RuntimeError):
    """No drawing was found within the node budget."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


def default_budget() -> int:
    env = os.environ.get("QUADSLOPE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# affine forms ----------------------------------------------------------------

def _add_into(out: Form, form: Mapping[int, Fraction], k) -> None:
    for key, c in form.items():
        v = out.get(key, 0) + k * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)


def _combo(*terms: Tuple[Mapping[int, Fraction], int]) -> Form:
    out: Form = {}
    for form, k in terms:
        _add_into(out, form, k)
    return out


def _frozen(form: Form) -> tuple:
    return tuple(sorted(form.items()))


class _Equations:
    """Incrementally reduced linear system; pivot forms never contain pivots."""

    __slots__ = ("piv",)

    def __init__(self):
        self.piv: Dict[int, Form] = {}

    def value(self, key: int) -> Form:
        p = self.piv.get(key)
        return p if p is not None else {key: Fraction(1)}

    def reduce(self, form: Mapping[int, Fraction]) -> Form:
        out: Form = {}
        for key, c in form.items():
            p = self.piv.get(key) if key < 0 else None
            if p is None:
                v = out.get(key, 0) + c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
            else:
                _add_into(out, p, c)
        return out

    def add(self, form: Mapping[int, Fraction]) -> bool:
        """Impose ``form == 0``; False when it contradicts the system."""
        r = self.reduce(form)
        unknowns = [k for k in r if k < 0]
        if not unknowns:
            return not r
        p = min(unknowns)  # latest unknown in construction order
        c = r.pop(p)
        expr = {k: -v / c for k, v in r.items()}
        piv = dict(self.piv)
        for q, f in piv.items():
            if p in f:
                g = dict(f)
                k = g.pop(p)
                _add_into(g, expr, k)
                piv[q] = g
        piv[p] = expr
        self.piv = piv
        return True


# sign assignment -------------------------------------------------------------

class _Parity:
    """Union-find over sign bits with parity constraints; node 0 is pinned to bit 0."""

    def __init__(self):
        self.parent: Dict[int, int] = {}
        self.par: Dict[int, int] = {}

    def find(self, a: int) -> Tuple[int, int]:
        if a not in self.parent:
            self.parent[a] = a
            self.par[a] = 0
            return a, 0
        if self.parent[a] == a:
            return a, 0
        root, p = self.find(self.parent[a])
        self.par[a] ^= p
        self.parent[a] = root
        return root, self.par[a]

    def union(self, a: int, b: int, parity: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == parity
        if ra == 0:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[ra] = rb
        self.par[ra] = pa ^ pb ^ parity
        return True

    def bit(self, a: int) -> int:
        """Bit of ``a``; roots of components not tied to node 0 take bit 0."""
        return self.find(a)[1]


class _SignProblem:
    """Sign atoms of forms under ``unknown -> +-F`` with fresh dominant ``F``."""

    def __init__(self, rank):
        self.rank = rank
        self.uf = _Parity()
        self.ok = True

    def atom(self, form: Form) -> Tuple[int, int]:
        """``(node, flip)`` with sign(form) = (-1) ** (bit(node) ^ flip); node 0 = constant."""
        unknowns = [k for k in form if k < 0]
        if unknowns:
            top = max(unknowns, key=self.rank)
            return -top, 0 if form[top] > 0 else 1
        if not form:
            return 0, -1
        top = max(form)
        return 0, 0 if form[top] > 0 else 1

    def negative(self, form: Form) -> None:
        node, flip = self.atom(form)
        if flip < 0 or not self.uf.union(node, 0, 1 ^ flip):
            self.ok = False

    def opposite(self, f1: Form, f2: Form) -> None:
        n1, x1 = self.atom(f1)
        n2, x2 = self.atom(f2)
        if x1 < 0 or x2 < 0:
            return  # coincidence, reported by the distinctness check
        if not self.uf.union(n1, n2, 1 ^ x1 ^ x2):
            self.ok = False


# search ------------------------------------------------------------------

def _slope_form(s: Slope, xu: int, yu: int, xv: int, yv: int) -> Form:
    dx, dy = s.direction()
    return _combo(({yv: Fraction(1)}, dx), ({yu: Fraction(1)}, -dx), ({xv: Fraction(1)}, -dy), ({xu: Fraction(1)}, dy))


def _const_form(value: SymScalar) -> Form:
    return {s: c for s, c in value.terms}


class _Search:
    def __init__(self, g: Graph, xa: Mapping[int, SymScalar], contract: bool, budget: int, seed: int):
        self.g = g
        self.contract = contract
        self.budget = budget
        self.nodes = 0
        root = min(range(g.n), key=lambda v: (g.degree(v), v))
        order = [root]
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    queue.append(w)
        if len(order) != g.n:
            raise DrawerError("search expects a connected graph")
        self.pos_of = {v: i for i, v in enumerate(order)}
        self.X = {v: -1 - 2 * i for v, i in self.pos_of.items()}
        self.Y = {v: -2 - 2 * i for v, i in self.pos_of.items()}
        self.edges = sorted(g.edges(), key=lambda e: (max(self.pos_of[e[0]], self.pos_of[e[1]]),
                                                       min(self.pos_of[e[0]], self.pos_of[e[1]])))
        rng = random.Random(seed)
        self.choices = []
        for _ in self.edges:
            opts = list(BASIC_SLOPES)
            if seed:
                rng.shuffle(opts)
            self.choices.append(opts)
        self.eq = _Equations()
        for v, x in sorted(xa.items()):
            if not self.eq.add(_combo(({self.X[v]: Fraction(1)}, 1), (_const_form(x), -1))):
                raise DrawerError("prescribed x-coordinates are contradictory")
        self.used: Dict[int, set] = defaultdict(set)
        self.assigned: List[Slope] = []

    def coords(self) -> List[Tuple[Form, Form]]:
        return [(self.eq.value(self.X[v]), self.eq.value(self.Y[v])) for v in range(self.g.n)]

    def coincidence(self) -> bool:
        seen = set()
        for x, y in self.coords():
            key = (_frozen(x), _frozen(y))
            if key in seen:
                return True
            seen.add(key)
        return False

    def run(self) -> Optional[List[Tuple[Form, Form]]]:
        return self._dfs(0)

    def _dfs(self, k: int):
        if k == len(self.edges):
            return self._leaf()
        u, v = self.edges[k]
        for s in self.choices[k]:
            if s in self.used[u] or s in self.used[v]:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchExhausted(f"node budget {self.budget} exhausted", self.nodes)
            saved = self.eq.piv
            if self.eq.add(_slope_form(s, self.X[u], self.Y[u], self.X[v], self.Y[v])) and not self.coincidence():
                self.used[u].add(s)
                self.used[v].add(s)
                self.assigned.append(s)
                found = self._dfs(k + 1)
                if found is not None:
                    return found
                self.assigned.pop()
                self.used[u].discard(s)
                self.used[v].discard(s)
            self.eq.piv = saved
        return None

    def _leaf(self):
        coords = self.coords()
        for rank in (_latest_first, _earliest_first):
            signs = self._signs(coords, rank)
            if signs is not None:
                return coords, rank, signs
        return None

    def _signs(self, coords, rank) -> Optional[_Parity]:
        g = self.g
        sp = _SignProblem(rank)
        if self.contract:
            by_x = defaultdict(list)
            by_sum = defaultdict(list)
            for v, (x, y) in enumerate(coords):
                by_x[_frozen(x)].append(v)
                by_sum[_frozen(_combo((x, 1), (y, 1)))].append(v)
            for u in range(g.n):
                d = g.degree(u)
                if d not in (1, 2):
                    continue
                xu, yu = coords[u]
                groups = [by_x[_frozen(xu)]]
                if d == 1:
                    groups.append(by_sum[_frozen(_combo((xu, 1), (yu, 1)))])
                for grp in groups:
                    for w in grp:
                        if w != u:
                            sp.negative(_combo((coords[w][1], 1), (yu, -1)))
                            if not sp.ok:
                                return None
        lines = {}
        for s in BASIC_SLOPES:
            dx, dy = s.direction()
            grp = defaultdict(list)
            for v, (x, y) in enumerate(coords):
                grp[_frozen(_combo((y, dx), (x, -dy)))].append(v)
            lines[s] = grp
        for (u, v), s in zip(self.edges, self.assigned):
            dx, dy = s.direction()
            xu, yu = coords[u]
            xv, yv = coords[v]
            for w in lines[s][_frozen(_combo((yu, dx), (xu, -dy)))]:
                if w in (u, v):
                    continue
                xw, yw = coords[w]
                f1 = _combo((xw, dx), (yw, dy), (xu, -dx), (yu, -dy))
                f2 = _combo((xv, dx), (yv, dy), (xw, -dx), (yw, -dy))
                sp.opposite(f1, f2)
                if not sp.ok:
                    return None
        return sp.uf



def _latest_first(key: int) -> int:
    return -key


def _earliest_first(key: int) -> int:
    return key


def _realize(coords, rank, signs: _Parity, pool: SymbolPool) -> List[Point]:
    unknowns = sorted({k for x, y in coords for k in list(x) + list(y) if k < 0}, key=rank)
    symbol_of = {}
    for k in unknowns:
        sgn = -1 if signs.bit(-k) else 1
        symbol_of[k] = (pool.fresh(), sgn)

    def conv(form: Form) -> SymScalar:
        out: Dict[int, Fraction] = {}
        for k, c in form.items():
            if k < 0:
                s, sgn = symbol_of[k]
                out[s] = out.get(s, 0) + sgn * c
            else:
                out[k] = out.get(k, 0) + c
        return SymScalar(out)

    return [Point(conv(x), conv(y)) for x, y in coords]


def search_drawing(g: Graph, xa: Optional[Mapping[int, SymScalar]] = None, *, contract: bool = True,
                   budget: Optional[int] = None, seed: int = 0,
                   pool: Optional[SymbolPool] = None) -> Tuple[List[Point], int]:
    """Search a basic-slope drawing of a connected graph; returns points and nodes used.

    With ``contract`` set, properties (3) and (4) are enforced as well.
    """
    xa = dict(xa or {})
    budget = default_budget() if budget is None else budget
    if pool is None:
        pool = SymbolPool.above(xa.values())
    else:
        pool.reserve_above(xa.values())
    if g.n == 1:
        x = xa.get(0)
        return [Point(x if x is not None else SymScalar.symbol(pool.fresh()), SymScalar.symbol(pool.fresh()))], 0
    search = _Search(g, xa, contract, budget, seed)
    found = search.run()
    if found is None:
        raise SearchExhausted("search space exhausted without a drawing", search.nodes)
    return _realize(*found, pool), search.nodes


# public contract -----------------------------------------------------------

def _check_assignment(g: Graph, xa: Mapping[int, SymScalar]) -> None:
    low = {v for v in range(g.n) if g.degree(v) <= 2}
    if set(xa) != low:
        raise DrawerError("x-assignment must cover exactly the vertices of degree at most two")
    for v, x in xa.items():
        terms = x.terms
        if len(terms) != 1 or terms[0][0] == UNIT or abs(terms[0][1]) != 1:
            raise DrawerError(f"x-coordinate of vertex {v} must be a signed basis symbol, got {x}")


def check_subcubic_input(g: Graph) -> None:
    if g.allows_parallel and len(set(g.edges())) != g.m:
        raise DrawerError("parallel edges cannot be drawn")
    for comp in connected_components(g):
        sub, _ = g.induced(comp)
        c = classify(sub)
        if c.max_degree > 3:
            raise DrawerError("a component has a vertex of degree above three")
        if c.is_cubic:
            raise DrawerError("a component is cubic (no vertex of degree at most two)")
        if c.is_cycle:
            raise DrawerError("a component is a cycle")


def draw_subcubic(g: Graph, xa: Mapping[int, SymScalar], *, budget: Optional[int] = None, seed: int = 0,
                  pool: Optional[SymbolPool] = None) -> Drawing:
    """Draw a subcubic graph (no cycle components) honouring the x-assignment.

    Components are drawn with private fresh symbols and stacked along the
    y-axis by multiples of a further dominant symbol, which leaves all
    prescribed x-coordinates untouched.
    """
    check_subcubic_input(g)
    _check_assignment(g, xa)
    if pool is None:
        pool = SymbolPool.above(xa.values())
    else:
        pool.reserve_above(xa.values())
    pos: List[Optional[Point]] = [None] * g.n
    comps = connected_components(g)
    for comp in comps:
        sub, old = g.induced(comp)
        sub_xa = {i: xa[v] for i, v in enumerate(old) if v in xa}
        pts, _ = search_drawing(sub, sub_xa, contract=True, budget=budget, seed=seed, pool=pool)
        for i, v in enumerate(old):
            pos[v] = pts[i]
    if len(comps) > 1:
        lift = pool.fresh()
        for k, comp in enumerate(comps):
            dy = SymScalar.symbol(lift, k)
            for v in comp:
                pos[v] = Point(pos[v].x, pos[v].y + dy)
    drawing = Drawing(g, pos, BASIC)
    report = verify_subcubic_contract(g, xa, drawing)
    if not report.ok:
        raise AssertionError(f"drawer produced an invalid drawing:\n{report}")
    return drawing


def verify_subcubic_contract(g: Graph, xa: Mapping[int, SymScalar], d: Drawing) -> Report:
    """Check straight-line validity plus properties (1)-(4), exactly."""
    rep = verify_drawing(g, d, BASIC)
    rep.violations = [Violation("property-2", v.detail, v.witness) if v.kind == "slope" else v
                      for v in rep.violations]
    if len(d.pos) != g.n:
        return rep
    pos = d.pos
    for v in range(g.n):
        if g.degree(v) <= 2:
            if v not in xa:
                rep.add("property-1", f"vertex {v} has no prescribed x-coordinate", v)
            elif pos[v].x != xa[v]:
                rep.add("property-1", f"vertex {v} has x = {pos[v].x}, expected {xa[v]}", v)
    for u in range(g.n):
        d_u = g.degree(u)
        if d_u not in (1, 2):
            continue
        for w in range(g.n):
            if w == u:
                continue
            if is_north(pos[u], pos[w]):
                kind = "property-3" if d_u == 2 else "property-4"
                rep.add(kind, f"vertex {w} is North of degree-{d_u} vertex {u}", u, w)
            elif d_u == 1 and is_northwest(pos[u], pos[w]):
                rep.add("property-4", f"vertex {w} is Northwest of degree-1 vertex {u}", u, w)
    return rep


def repeated_slopes_at_vertices(g: Graph, d: Drawing) -> List[int]:
    """Vertices at which two incident edges share a slope."""
    bad = []
    for v in range(g.n):
        slopes = [slope_between(d.pos[v], d.pos[w]) for w in g.adj[v]]
        if len(set(slopes)) != len(slopes):
            bad.append(v)
    return bad
