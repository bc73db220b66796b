"""Structural search on cubic graphs: girth, short supercycles and suitable M-cuts.

Also hosts the small-graph shortcuts (bridges, two-edge cuts, Hamiltonian
cycles), the supercycle bound table, and generators of cubic graphs used as
test corpora.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .graph import (
    Graph,
    Refusal,
    SuperCycleCert,
    VertexSet,
    classify,
    connected_components,
    contract,
    is_supercycle,
    vertex_set,
)


class StructureError(ValueError):
    """Input violates an operation's preconditions."""


def ceil_log2(q: Union[int, Fraction]) -> int:
    """Exact ``ceil(log2(q))`` for rational ``q > 0``."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log of non-positive number")
    k = 0
    if q >= 1:
        while Fraction(2) ** k < q:
            k += 1
    else:
        while Fraction(2) ** (k - 1) >= q:
            k -= 1
    return k


def girth_bound(n: int) -> int:
    return 2 * ceil_log2(Fraction(n, 3) + 1)


def supercycle_bound(n: int, g: int) -> int:
    return 2 * ceil_log2(Fraction(n + 1, g)) + g - 1


def _require_cubic_connected(g: Graph) -> None:
    c = classify(g)
    if not c.is_cubic:
        raise StructureError("graph is not cubic")
    if not c.is_connected:
        raise StructureError("graph is not connected")


# girth ---------------------------------------------------------------------

def _incidence(g: Graph) -> List[List[Tuple[int, int]]]:
    inc: List[List[Tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges()):
        inc[u].append((v, eid))
        inc[v].append((u, eid))
    return inc


def _path_to_root(parent: List[int], v: int) -> List[int]:
    path = [v]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def _close_cycle(parent: List[int], u: int, w: int) -> List[int]:
    """Cycle formed by tree paths to ``u`` and ``w`` plus the edge ``uw``."""
    pu = _path_to_root(parent, u)
    pw = _path_to_root(parent, w)
    on_u = set(pu)
    lca = next(x for x in pw if x in on_u)
    left = pu[: pu.index(lca) + 1]
    right = pw[: pw.index(lca)]
    return left[::-1] + right


def girth_cycle(g: Graph) -> Tuple[int, List[int]]:
    """Length and vertex sequence of a shortest cycle (exact girth).

    Works on multigraphs, where a doubled edge is a cycle of length two.
    """
    inc = _incidence(g)
    best: Optional[List[int]] = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        pedge = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w, eid in inc[u]:
                if eid == pedge[u]:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    pedge[w] = eid
                    queue.append(w)
                else:
                    cyc = _close_cycle(parent, u, w)
                    if best is None or len(cyc) < len(best):
                        best = cyc
    if best is None:
        raise StructureError("graph is acyclic")
    return len(best), best


# supercycles -----------------------------------------------------------------

def find_short_supercycle(g: Graph) -> SuperCycleCert:
    """A supercycle built as in the contraction argument.

    Contract a girth cycle, run BFS from the contracted vertex, and stop at the
    first edge that closes a cycle (or a doubled edge) in the contracted graph.
    The cycle together with both BFS paths expands back to a supercycle whose
    size is at most ``2*ceil(log2((n+1)/g)) + g - 1``.
    """
    _require_cubic_connected(g)
    _, cycle = girth_cycle(g)
    cg, mapping = contract(g, cycle)
    back = {new: old for old, new in enumerate(mapping) if new != 0}
    inc = _incidence(cg)
    parent = [-1] * cg.n
    pedge = [-1] * cg.n
    seen = [False] * cg.n
    seen[0] = True
    queue = deque([0])
    hit: Optional[Tuple[int, int]] = None
    while queue and hit is None:
        u = queue.popleft()
        for w, eid in inc[u]:
            if eid == pedge[u]:
                continue
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                pedge[w] = eid
                queue.append(w)
            else:
                hit = (u, w)
                break
    if hit is None:
        raise StructureError("contracted graph is a tree; input cannot be cubic")
    extra = set(_path_to_root(parent, hit[0])) | set(_path_to_root(parent, hit[1]))
    extra.discard(0)
    members = set(cycle) | {back[v] for v in extra}
    cert = is_supercycle(g, members)
    if not cert:
        raise AssertionError(f"construction produced a non-supercycle: {cert.reasons}")
    return cert


# cuts ----------------------------------------------------------------------

@dataclass(frozen=True)
class Cut:
    side_a: VertexSet
    side_b: VertexSet
    cut_edges: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.cut_edges)

    @property
    def is_m_cut(self) -> bool:
        ends = [x for e in self.cut_edges for x in e]
        return len(ends) == len(set(ends))


@dataclass(frozen=True)
class SuitableMCut:
    cut: Cut
    cert_a: SuperCycleCert
    cert_b: SuperCycleCert


def make_cut(g: Graph, side_a) -> Cut:
    a = vertex_set(side_a)
    in_a = set(a)
    b = vertex_set(v for v in range(g.n) if v not in in_a)
    if not a or not b:
        raise StructureError("both sides of a cut must be nonempty")
    edges = tuple(sorted((u, v) if u in in_a else (v, u) for u, v in g.edges() if (u in in_a) != (v in in_a)))
    return Cut(a, b, edges)


def certify_cut(g: Graph, side_a) -> Union[SuitableMCut, Refusal]:
    """Check from scratch that ``(side_a, rest)`` is a suitable M-cut."""
    cut = make_cut(g, side_a)
    reasons = []
    if not cut.is_m_cut:
        reasons.append("cut edges do not form a matching")
    rest = g.without_edges(cut.cut_edges)
    if len(connected_components(rest)) != 2:
        reasons.append("deleting the cut edges does not leave exactly two components")
    ca = is_supercycle(g, cut.side_a)
    cb = is_supercycle(g, cut.side_b)
    if not ca:
        reasons.extend("side A: " + r for r in ca.reasons)
    if not cb:
        reasons.extend("side B: " + r for r in cb.reasons)
    if reasons:
        return Refusal(tuple(reasons))
    return SuitableMCut(cut, ca, cb)


def find_suitable_m_cut(g: Graph, seed: SuperCycleCert) -> Union[SuitableMCut, Refusal]:
    """Grow a supercycle into one side of a suitable M-cut of size at most ``s - 2``.

    Common neighbours of cut edges are absorbed (lowest id first) until the
    cut is a matching; then all components of the remainder except the
    lowest-numbered one with more vertices than incident cut edges are
    absorbed as well.
    """
    _require_cubic_connected(g)
    s = seed.size
    if not g.n > 2 * s - 2:
        return Refusal((f"n={g.n} is not larger than 2s-2={2 * s - 2}",))
    side = set(seed.vertices)
    while True:
        common = [v for v in range(g.n) if v not in side and sum(w in side for w in g.adj[v]) >= 2]
        if not common:
            break
        side.add(common[0])
    rest = [v for v in range(g.n) if v not in side]
    if not rest:
        return Refusal(("absorption consumed the whole graph",))
    sub, old = g.induced(rest)
    chosen = None
    for comp in connected_components(sub):
        members = [old[i] for i in comp]
        incident = sum(1 for v in members for w in g.adj[v] if w in side)
        if len(members) > incident:
            chosen = set(members)
            break
    if chosen is None:
        return Refusal(("no component outweighs its cut edges",))
    result = certify_cut(g, [v for v in range(g.n) if v not in chosen])
    if result and result.cut.size > s - 2:
        raise AssertionError("cut larger than s - 2")
    return result


def _balance_key(cut: Cut) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    return (max(len(cut.side_a), len(cut.side_b)), cut.cut_edges)


def find_bridge_cut(g: Graph) -> Optional[SuitableMCut]:
    """A bridge as a size-one suitable M-cut, the most balanced one if several."""
    _require_cubic_connected(g)
    best = None
    for u, v in nx.bridges(g.to_networkx()):
        rest = g.without_edges([(u, v)])
        side = next(c for c in connected_components(rest) if u in c)
        res = certify_cut(g, side)
        if res and (best is None or _balance_key(res.cut) < _balance_key(best.cut)):
            best = res
    return best


def find_two_cut_split(g: Graph) -> Optional[SuitableMCut]:
    """A suitable M-cut made of two non-adjacent edges, most balanced first.

    In a cubic graph without a cut vertex, a two-vertex disconnecting set
    exists exactly when such an edge pair exists.
    """
    _require_cubic_connected(g)
    edges = g.edges()
    best = None
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            rest = g.without_edges([(a, b), (c, d)])
            comps = connected_components(rest)
            if len(comps) != 2:
                continue
            res = certify_cut(g, comps[0])
            if res and (best is None or _balance_key(res.cut) < _balance_key(best.cut)):
                best = res
    return best


def has_two_vertex_cut(g: Graph) -> bool:
    """Brute force: does deleting some pair of vertices disconnect ``g``?"""
    n = g.n
    for x in range(n):
        for y in range(x + 1, n):
            keep = [v for v in range(n) if v not in (x, y)]
            sub, _ = g.induced(keep)
            if len(connected_components(sub)) > 1:
                return True
    return False


# Hamiltonian cycles ------------------------------------------------------

def find_hamiltonian_cycle(g: Graph) -> Optional[List[int]]:
    """Exact backtracking search; returns a Hamiltonian cycle or None."""
    n = g.n
    if n < 3:
        return None
    nbrs = [sorted(set(a)) for a in g.adj]
    if any(len(a) < 2 for a in nbrs):
        return None
    on_path = [False] * n
    path = [0]
    on_path[0] = True

    def dead_end() -> bool:
        # every unvisited vertex needs two usable neighbours
        tail = path[-1]
        for v in range(n):
            if on_path[v]:
                continue
            free = sum(1 for w in nbrs[v] if not on_path[w] or w == tail or w == 0)
            if free < 2:
                return True
        return False

    def extend() -> bool:
        if len(path) == n:
            return 0 in nbrs[path[-1]]
        for w in nbrs[path[-1]]:
            if on_path[w]:
                continue
            on_path[w] = True
            path.append(w)
            if not dead_end() and extend():
                return True
            path.pop()
            on_path[w] = False
        return False

    return list(path) if extend() else None


# bound table ---------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    N: int
    two_s_minus_2: int
    mg: int
    g: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.N, self.two_s_minus_2, self.mg, self.g)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.as_tuple()) + "]"


def fmax(N: int) -> BoundReport:
    """Largest ``2s - 2`` over girths ``3..mg`` for an ``N``-vertex cubic graph."""
    if N < 4:
        raise ValueError("N must be at least 4")
    best, g = -1, 0
    mg = girth_bound(N)
    if mg < 3:
        return BoundReport(N, 2 * best - 2, mg, g)
    for i in range(3, mg + 1):
        val = supercycle_bound(N, i)
        if best < val:
            best, g = val, i
    return BoundReport(N, 2 * best - 2, mg, g)


# generators --------------------------------------------------------------

def _invariant(g: Graph) -> tuple:
    profiles = []
    for r in range(g.n):
        dist = [-1] * g.n
        dist[r] = 0
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        layers = [0] * g.n
        for d in dist:
            layers[d] += 1
        tri = sum(1 for a in g.adj[r] for b in g.adj[r] if a < b and g.has_edge(a, b))
        profiles.append((tri, tuple(layers)))
    return tuple(sorted(profiles))


class IsomorphismClasses:
    """Incremental deduplication of graphs up to isomorphism."""

    def __init__(self):
        self._buckets: Dict[tuple, List[nx.Graph]] = {}
        self.representatives: List[Graph] = []

    def add(self, g: Graph) -> bool:
        key = (g.n, g.m, _invariant(g))
        bucket = self._buckets.setdefault(key, [])
        ng = g.to_networkx()
        if any(nx.is_isomorphic(ng, h) for h in bucket):
            return False
        bucket.append(ng)
        self.representatives.append(g)
        return True


def _cubic_labelled(n: int) -> Iterator[Graph]:
    """Connected cubic graphs on ``n`` vertices, pruned by untouched-vertex symmetry.

    Every isomorphism class is produced at least once; duplicates remain.
    """
    adj: List[List[int]] = [[] for _ in range(n)]

    def rec() -> Iterator[Graph]:
        cur = next((v for v in range(n) if len(adj[v]) < 3), None)
        if cur is None:
            yield Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
            return
        if cur > 0 and not adj[cur]:
            return  # touched part closed off: disconnected
        last = max((w for w in adj[cur] if w > cur), default=cur)
        seen_untouched = False
        for j in range(last + 1, n):
            if len(adj[j]) >= 3 or j in adj[cur]:
                continue
            if not adj[j]:
                if seen_untouched:
                    continue
                seen_untouched = True
            adj[cur].append(j)
            adj[j].append(cur)
            yield from rec()
            adj[cur].pop()
            adj[j].pop()

    yield from rec()


def enumerate_cubic_graphs(n: int) -> Iterator[Graph]:
    """Each connected cubic graph on ``n`` vertices once, up to isomorphism."""
    if n % 2 or not 4 <= n <= 12:
        raise ValueError("supported sizes are even n with 4 <= n <= 12")
    classes = IsomorphismClasses()
    for g in _cubic_labelled(n):
        if classes.add(g):
            yield g


def random_cubic_graph(n: int, rng: random.Random, max_tries: int = 100000) -> Graph:
    """Uniform pairing-model sample, rejecting loops, multi-edges and disconnection."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need even n >= 4")
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if not ok:
            continue
        g = Graph(n, sorted(edges))
        if classify(g).is_connected:
            return g
    raise RuntimeError("pairing model rejected too many samples")
