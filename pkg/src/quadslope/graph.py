"""Undirected (multi)graphs on dense vertex ids, parsers, and basic predicates."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

VertexSet = Tuple[int, ...]


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(vertices)))


class Graph:
    """Immutable undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the sorted multiset of neighbours of ``v``.  Parallel edges
    are only permitted when ``allows_parallel`` is set; self-loops never are.
    """

    __slots__ = ("n", "adj", "allows_parallel", "_edges")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = (), allows_parallel: bool = False):
        if n < 0:
            raise ValueError("negative vertex count")
        adj: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen and not allows_parallel:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.allows_parallel = allows_parallel
        self._edges: Optional[Tuple[Tuple[int, int], ...]] = None

    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted, repeated per multiplicity."""
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges())

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph relabelled to ``0..k-1`` plus the new->old id list."""
        old = list(vertex_set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(old), edges, self.allows_parallel), old

    def without_edges(self, removed: Iterable[Tuple[int, int]]) -> "Graph":
        drop = Counter((min(u, v), max(u, v)) for u, v in removed)
        kept = []
        for e in self.edges():
            if drop[e]:
                drop[e] -= 1
            else:
                kept.append(e)
        if +drop:
            raise ValueError(f"edges not present: {sorted(+drop)}")
        return Graph(self.n, kept, self.allows_parallel)

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph() if self.allows_parallel else nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in g.edges()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# graph6 ----------------------------------------------------------------------

_HEADER = b">>graph6<<"


def _decode_size(data: bytes) -> Tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 36-bit size prefix")
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
        if n <= 258047:
            raise GraphFormatError("non-minimal size prefix")
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated 18-bit size prefix")
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ch - 63)
    if n <= 62:
        raise GraphFormatError("non-minimal size prefix")
    return n, 4


def parse_graph6(text: Union[bytes, str]) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if any(ch < 63 or ch > 126 for ch in data):
        raise GraphFormatError("graph6 characters must lie in 63..126")
    n, offset = _decode_size(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        v = ch - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> bytes:
    if g.allows_parallel and len(set(g.edges())) != g.m:
        raise GraphFormatError("graph6 cannot encode parallel edges")
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    elif n <= 258047:
        out = bytearray([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        out = bytearray([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise GraphFormatError("first line must be 'n m'") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("negative sizes")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        try:
            u, v = (int(t) for t in ln.split())
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range in {ln!r}")
        if u == v:
            raise GraphFormatError(f"loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# predicates ----------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    is_cubic: bool
    is_subcubic: bool
    is_cycle: bool
    is_connected: bool
    max_degree: int


def connected_components(g: Graph) -> List[VertexSet]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(vertex_set(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def classify(g: Graph) -> Classification:
    degs = g.degrees()
    maxd = max(degs, default=0)
    cubic = all(d == 3 for d in degs)
    connected = is_connected(g)
    return Classification(
        is_cubic=cubic,
        is_subcubic=maxd <= 3 and not cubic,
        is_cycle=g.n > 0 and connected and all(d == 2 for d in degs),
        is_connected=connected,
        max_degree=maxd,
    )


@dataclass(frozen=True)
class SuperCycleCert:
    vertices: VertexSet
    size: int
    witness_deg3: int


@dataclass(frozen=True)
class Refusal:
    reasons: Tuple[str, ...]

    def __bool__(self) -> bool:
        return False


def induced_degrees(g: Graph, members: VertexSet) -> Dict[int, int]:
    inside = set(members)
    return {v: sum(1 for w in g.adj[v] if w in inside) for v in members}


def is_supercycle(g: Graph, members: Iterable[int]) -> Union[SuperCycleCert, Refusal]:
    """Certificate that the induced subgraph on ``members`` is a supercycle."""
    s = vertex_set(members)
    if not s:
        raise ValueError("empty vertex set")
    if s[0] < 0 or s[-1] >= g.n:
        raise ValueError("vertex id out of range")
    sub, _ = g.induced(s)
    reasons = []
    if not is_connected(sub):
        reasons.append("induced subgraph is disconnected")
    deg = induced_degrees(g, s)
    low = [v for v in s if deg[v] < 2]
    if low:
        reasons.append(f"vertex {low[0]} has induced degree {deg[low[0]]} < 2")
    high = [v for v in s if deg[v] >= 3]
    if not high:
        reasons.append("all induced degrees are two" if not low else "no vertex of induced degree three")
    if reasons:
        return Refusal(tuple(reasons))
    return SuperCycleCert(vertices=s, size=len(s), witness_deg3=high[0])


def contract(g: Graph, group: Iterable[int]) -> Tuple[Graph, List[int]]:
    """Contract ``group`` to one vertex; returns the multigraph and old->new ids.

    Edges inside the group vanish; edges leaving it become (possibly parallel)
    edges at the contracted vertex, which receives id 0.
    """
    grp = set(group)
    mapping = [0] * g.n
    nxt = 1
    for v in range(g.n):
        if v not in grp:
            mapping[v] = nxt
            nxt += 1
    edges = []
    for u, v in g.edges():
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.append((a, b))
    return Graph(nxt, edges, allows_parallel=True), mapping


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def isomorphism(g: Graph, h: Graph) -> Optional[Dict[int, int]]:
    """A mapping from vertices of ``g`` to vertices of ``h``, if isomorphic."""
    if g.n != h.n or g.m != h.m:
        return None
    matcher = nx.algorithms.isomorphism.GraphMatcher(g.to_networkx(), h.to_networkx())
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return Graph(off, edges, any(g.allows_parallel for g in graphs))
