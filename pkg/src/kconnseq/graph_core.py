"""Simple undirected graphs with exact vertex-connectivity queries.

Graphs are immutable: vertices are 0..n-1 and adjacency is stored as one
int bitmask per vertex, which keeps neighborhood intersection, BFS over
allowed vertex sets, and complement cheap for the sizes this package
enumerates.  Mutating operations (add_edge, union, ...) return new graphs.

Connectivity is computed the Menger way: the number of internally disjoint
a-b paths equals the max flow between a and b after splitting every
internal vertex into an in/out pair joined by a unit-capacity arc.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    KOutOfRange,
    MapNotInjective,
    SameVertex,
    SelfLoop,
    VertexOutOfRange,
)
from .sequence_core import DegreeSequence, normalize

__all__ = [
    "Edge",
    "edge",
    "SimpleGraph",
    "complete_graph",
    "empty_graph",
    "complement",
    "graph_union",
    "add_edge",
    "remove_edge",
    "relabel",
    "degree_sequence",
    "internally_disjoint_path_count",
    "vertex_connectivity",
    "is_k_connected",
    "is_connected",
]

Edge = tuple[int, int]


def edge(a: int, b: int) -> Edge:
    """Canonical (min, max) form of an undirected edge; rejects loops."""
    if a == b:
        raise SelfLoop(f"loop at vertex {a}")
    return (a, b) if a < b else (b, a)


class SimpleGraph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise SelfLoop(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise VertexOutOfRange(f"edge ({a},{b}) outside 0..{n - 1}")
            if adj[a] >> b & 1:
                raise DuplicateEdge(f"edge ({a},{b}) given twice")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def _from_masks(cls, n: int, adj: Sequence[int]) -> "SimpleGraph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "_adj", tuple(adj))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    # -- queries ---------------------------------------------------------

    def has_edge(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        return bool(self._adj[a] >> b & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self._adj[v]))

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def edges(self) -> Iterator[Edge]:
        for a in range(self.n):
            m = self._adj[a] >> (a + 1)
            b = a + 1
            while m:
                if m & 1:
                    yield (a, b)
                m >>= 1
                b += 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def _check_vertex(self, v: int):
        if not (0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges())})"


def _bits(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def complete_graph(n: int) -> SimpleGraph:
    full = (1 << n) - 1
    return SimpleGraph._from_masks(n, [full ^ (1 << v) for v in range(n)])


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph._from_masks(n, [0] * n)


def complement(g: SimpleGraph) -> SimpleGraph:
    full = (1 << g.n) - 1
    return SimpleGraph._from_masks(
        g.n, [(full ^ (1 << v)) & ~g._adj[v] for v in range(g.n)]
    )


def graph_union(
    g: SimpleGraph, h: SimpleGraph, vertex_map: Sequence[int] | None = None
) -> SimpleGraph:
    """Edge-set union after relabeling h's vertices into g's label space.

    ``vertex_map[v]`` gives the combined-space label of h's vertex v;
    shared labels mean intentionally shared vertices.  The identity map is
    assumed when omitted.  The result has max(g.n, 1 + max mapped label)
    vertices and the union of both edge sets (overlapping edges collapse).
    """
    if vertex_map is None:
        vertex_map = range(h.n)
    else:
        if len(vertex_map) != h.n:
            raise MapNotInjective(
                f"map covers {len(vertex_map)} vertices, graph has {h.n}"
            )
        if len(set(vertex_map)) != h.n:
            raise MapNotInjective(f"map {list(vertex_map)!r} repeats a label")
        if any(v < 0 for v in vertex_map):
            raise VertexOutOfRange("mapped labels must be >= 0")
    n_out = max(g.n, max(vertex_map, default=-1) + 1)
    adj = list(g._adj) + [0] * (n_out - g.n)
    for a, b in h.edges():
        na, nb = vertex_map[a], vertex_map[b]
        adj[na] |= 1 << nb
        adj[nb] |= 1 << na
    return SimpleGraph._from_masks(n_out, adj)


def add_edge(g: SimpleGraph, a: int, b: int) -> SimpleGraph:
    a, b = edge(a, b)
    g._check_vertex(b)
    if g._adj[a] >> b & 1:
        raise DuplicateEdge(f"edge ({a},{b}) already present")
    adj = list(g._adj)
    adj[a] |= 1 << b
    adj[b] |= 1 << a
    return SimpleGraph._from_masks(g.n, adj)


def remove_edge(g: SimpleGraph, a: int, b: int) -> SimpleGraph:
    a, b = edge(a, b)
    g._check_vertex(b)
    if not g._adj[a] >> b & 1:
        raise ValueError(f"edge ({a},{b}) not present")
    adj = list(g._adj)
    adj[a] &= ~(1 << b)
    adj[b] &= ~(1 << a)
    return SimpleGraph._from_masks(g.n, adj)


def relabel(g: SimpleGraph, mapping: Sequence[int]) -> SimpleGraph:
    """Apply a vertex bijection old->new given as mapping[old] = new."""
    if len(mapping) != g.n or sorted(mapping) != list(range(g.n)):
        raise MapNotInjective(f"mapping {mapping!r} is not a permutation of 0..{g.n - 1}")
    adj = [0] * g.n
    for a, b in g.edges():
        na, nb = mapping[a], mapping[b]
        adj[na] |= 1 << nb
        adj[nb] |= 1 << na
    return SimpleGraph._from_masks(g.n, adj)


def degree_sequence(g: SimpleGraph) -> DegreeSequence:
    """Non-increasing degree sequence; rejects isolated vertices."""
    return normalize(g._adj[v].bit_count() for v in range(g.n))


def is_connected(g: SimpleGraph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g._adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


# -- Menger / max-flow -----------------------------------------------------


def _vertex_capacity_max_flow(g: SimpleGraph, a: int, b: int, cap: int | None) -> int:
    """Count internally disjoint a-b paths by unit-capacity max flow.

    Every vertex v becomes v_in = 2v and v_out = 2v + 1 joined by a unit
    arc; each graph edge becomes two unit arcs u_out -> w_in.  Flow from
    a_out to b_in then equals the number of internally disjoint paths.
    ``cap`` stops early once that many augmenting paths are found.
    """
    source = 2 * a + 1
    sink = 2 * b
    # residual[u] = set of arcs with remaining capacity, as dict u -> mask.
    size = 2 * g.n
    residual = [0] * size
    for v in range(g.n):
        if v != a and v != b:
            residual[2 * v] |= 1 << (2 * v + 1)
    for u, w in g.edges():
        residual[2 * u + 1] |= 1 << (2 * w)
        residual[2 * w + 1] |= 1 << (2 * u)

    flow = 0
    while cap is None or flow < cap:
        # BFS for an augmenting path in the residual digraph.
        parent = [-1] * size
        parent[source] = source
        q = deque([source])
        seen = 1 << source
        found = False
        while q:
            u = q.popleft()
            if u == sink:
                found = True
                break
            m = residual[u] & ~seen
            seen |= m
            for w in _bits(m):
                parent[w] = u
                q.append(w)
        if not found:
            break
        v = sink
        while v != source:
            u = parent[v]
            residual[u] &= ~(1 << v)
            residual[v] |= 1 << u
            v = u
        flow += 1
    return flow


def internally_disjoint_path_count(g: SimpleGraph, a: int, b: int) -> int:
    """Maximum number of a-b paths sharing no internal vertices.

    Endpoints may be adjacent; the direct edge counts as one path.
    """
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise SameVertex(f"endpoints must differ, got {a} twice")
    if not g.has_edge(a, b):
        return _vertex_capacity_max_flow(g, a, b, cap=None)
    # Adjacent endpoints: the edge itself is one path no separator can cut.
    return 1 + _vertex_capacity_max_flow(remove_edge(g, a, b), a, b, cap=None)


def vertex_connectivity(g: SimpleGraph, *, upper_bound: int | None = None) -> int:
    """kappa(G): minimum vertices whose removal disconnects or trivializes.

    Conventions: complete graphs give n - 1, the one-vertex graph gives 0,
    and any disconnected graph gives 0.  For incomplete connected graphs
    this is the minimum path count over non-adjacent pairs (adjacent pairs
    can be skipped: some minimum separator avoids both endpoints of any
    missing edge).  ``upper_bound`` caps the answer, letting flow searches
    stop early -- useful when only "is kappa >= k" matters.
    """
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    full = (1 << n) - 1
    best = n - 1
    if upper_bound is not None and upper_bound < best:
        best = upper_bound
    # Any minimum separator leaves two components, and any pair drawn from
    # different components is non-adjacent -- so the minimum over all
    # non-adjacent pairs is exact.  Flows are capped at the best seen.
    for a in range(n):
        non_adj = full & ~g._adj[a] & ~((1 << (a + 1)) - 1)
        for b in _bits(non_adj):
            f = _vertex_capacity_max_flow(g, a, b, cap=best)
            if f < best:
                best = f
    return best


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """True iff vertex_connectivity(g) >= k.  k = 0 holds vacuously."""
    if k < 0:
        raise KOutOfRange(f"k must be >= 0, got {k}")
    if k == 0:
        return True
    if g.n <= k:
        return False
    return vertex_connectivity(g, upper_bound=k) >= k
