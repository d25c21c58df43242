"""Immutable simple graphs with bitset adjacency, plus structural queries.

Vertices are ``0 .. n-1``.  ``adj[v]`` is a Python int whose bit ``u`` is
set iff ``uv`` is an edge, so neighbourhood intersection and union are
single integer operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedError, ParameterError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Undirected simple graph.

    Build with :meth:`from_edges`.  Instances are immutable and hashable;
    two graphs are equal iff they have the same order and edge set.
    """

    __slots__ = ("_n", "_adj", "_edge_count")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ParameterError(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ParameterError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ParameterError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ParameterError(f"adjacency not symmetric at ({v}, {u})")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_edge_count", sum(r.bit_count() for r in adj) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on ``n`` vertices; repeated edges collapse, self-loops raise."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, v: int) -> list[int]:
        return bits_to_list(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def subgraph_without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self._adj)
        for u, v in removed:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self._n, adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self._edge_count})"


@dataclass(frozen=True)
class Bipartition:
    """The two colour classes of a bipartite graph, as sorted tuples."""

    u_side: tuple[int, ...]
    w_side: tuple[int, ...]

    def side_of(self, v: int) -> int:
        """0 if ``v`` is in ``u_side``, 1 otherwise."""
        return 0 if v in self.u_side else 1

    def swapped(self) -> "Bipartition":
        return Bipartition(self.w_side, self.u_side)


@dataclass(frozen=True)
class NotBipartite:
    """Returned by :func:`bipartition` when the graph has an odd cycle."""

    odd_cycle: tuple[int, ...]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _reach(g, 0) == (1 << g.n) - 1


def _reach(g: Graph, source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[list[int]]:
    left = (1 << g.n) - 1
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(g, v)
        out.append(bits_to_list(comp))
        left &= ~comp
    return out


def bipartition(g: Graph) -> Bipartition | NotBipartite:
    """Two-colour a connected graph by BFS layers from vertex 0.

    Vertex 0 always lands in ``u_side``.  For a non-bipartite graph the
    result carries an odd cycle as a closed vertex sequence (first vertex
    not repeated).
    """
    if not is_connected(g):
        raise DisconnectedError("bipartition requires a connected graph")
    if g.n == 0:
        return Bipartition((), ())
    side = [-1] * g.n
    parent = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in iter_bits(g.adj[v]):
            if side[u] < 0:
                side[u] = 1 - side[v]
                parent[u] = v
                queue.append(u)
            elif side[u] == side[v]:
                return NotBipartite(_odd_cycle(parent, v, u))
    u_side = tuple(v for v in range(g.n) if side[v] == 0)
    w_side = tuple(v for v in range(g.n) if side[v] == 1)
    return Bipartition(u_side, w_side)


def _odd_cycle(parent: list[int], a: int, b: int) -> tuple[int, ...]:
    # a and b are adjacent and at the same BFS parity; join their tree paths
    path_a = [a]
    while parent[path_a[-1]] >= 0:
        path_a.append(parent[path_a[-1]])
    path_b = [b]
    while parent[path_b[-1]] >= 0:
        path_b.append(parent[path_b[-1]])
    on_a = {v: i for i, v in enumerate(path_a)}
    j = 0
    while path_b[j] not in on_a:
        j += 1
    i = on_a[path_b[j]]
    return tuple(path_a[: i + 1] + path_b[:j][::-1])


def square_adjacency(g: Graph) -> list[int]:
    """Rows of G^2: vertices at distance 1 or 2."""
    rows = []
    for v in range(g.n):
        row = g.adj[v]
        for u in iter_bits(g.adj[v]):
            row |= g.adj[u]
        rows.append(row & ~(1 << v))
    return rows


def square_induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph of G^2 induced by ``s``.

    Returns ``(h, index)`` where ``h`` has vertices ``0 .. |s|-1`` and
    ``index[j]`` is the vertex of ``g`` that became ``j``.  ``index`` is
    ``s`` sorted ascending.
    """
    index = tuple(sorted(set(s)))
    for v in index:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} not in graph of order {g.n}")
    sq = square_adjacency(g)
    pos = {v: j for j, v in enumerate(index)}
    adj = []
    for v in index:
        adj.append(mask_of(pos[u] for u in iter_bits(sq[v]) if u in pos))
    return Graph(len(index), adj), index


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = d
    return dist


def eccentricity(g: Graph, v: int) -> int:
    seen = frontier = 1 << v
    full = (1 << g.n) - 1
    d = 0
    while seen != full:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        if not frontier:
            raise DisconnectedError("eccentricity on a disconnected graph")
        seen |= frontier
        d += 1
    return d


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise ParameterError("diameter of the empty graph")
    if not is_connected(g):
        raise DisconnectedError("diameter requires a connected graph")
    return max(eccentricity(g, v) for v in range(g.n))


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_odd_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.n % 2 == 1 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_complete_bipartite(g: Graph, bip: Bipartition) -> bool:
    return g.edge_count == len(bip.u_side) * len(bip.w_side)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    index = tuple(sorted(set(vertices)))
    pos = {v: j for j, v in enumerate(index)}
    adj = [mask_of(pos[u] for u in iter_bits(g.adj[v]) if u in pos) for v in index]
    return Graph(len(index), adj), index


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
