"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

Adjacency of vertex ``v`` is stored as a Python ``int`` whose bit ``w`` is set
iff ``v ~ w``.  Python integers are arbitrary precision, so the same code path
serves ``n <= 64`` and larger graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidEdge, InvalidVertex, NoSuchEdge

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    edge_count: int = field(compare=False)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise InvalidVertex(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            for x in (u, v):
                if not 0 <= x < n:
                    raise InvalidVertex(f"vertex {x} out of range 0..{n - 1}")
            if u == v:
                raise InvalidEdge(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._from_adj(adj)

    @classmethod
    def _from_adj(cls, adj: Sequence[int]) -> "Graph":
        m = sum(popcount(a) for a in adj) // 2
        return cls(len(adj), tuple(adj), m)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n, 0)

    # -- queries ------------------------------------------------------------

    @property
    def full(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v!r} out of range 0..{self.n - 1}")
        return v

    def mask(self, vertices: Iterable[int]) -> int:
        """Validated bitmask of a vertex collection."""
        m = 0
        for v in vertices:
            m |= 1 << self.check_vertex(v)
        return m

    # -- derived graphs ------------------------------------------------------

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise NoSuchEdge(f"no edge {u}-{v}")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj), self.edge_count - 1)

    def with_edges(self, edges: Iterable[Sequence[int]], extra_vertices: int = 0) -> "Graph":
        return Graph.from_edge_list(self.n + extra_vertices, [*self.edges(), *edges])

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on a bitmask; returns the graph and new->old map."""
        old = list(bits(mask))
        pos = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            a = 0
            for w in bits(self.adj[v] & mask):
                a |= 1 << pos[w]
            adj.append(a)
        return Graph._from_adj(adj), old

    # -- connectivity helpers -------------------------------------------------

    def component_of(self, v: int, within: int | None = None) -> int:
        """Mask of the component containing ``v`` in the subgraph on ``within``."""
        allowed = self.full if within is None else within
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= self.adj[x]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self, within: int | None = None) -> list[int]:
        rest = self.full if within is None else within
        out = []
        while rest:
            c = self.component_of(lowest(rest), rest)
            out.append(c)
            rest &= ~c
        return out

    def is_connected(self, within: int | None = None) -> bool:
        rest = self.full if within is None else within
        if not rest:
            return True
        return self.component_of(lowest(rest), rest) == rest

    def bfs_distances(self, sources: int, within: int | None = None) -> list[int | None]:
        """Distance from the source mask to each vertex (``None`` if unreachable)."""
        allowed = self.full if within is None else within
        dist: list[int | None] = [None] * self.n
        frontier = sources & allowed
        seen = frontier
        d = 0
        while frontier:
            nxt = 0
            for x in bits(frontier):
                dist[x] = d
                nxt |= self.adj[x]
            frontier = nxt & allowed & ~seen
            seen |= frontier
            d += 1
        return dist

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, order is irrelevant."""
    return Graph.from_edge_list(n, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[S]`` relabelled to ``0..|S|-1`` in ascending original-id order.

    The second return value maps new ids to original ids.
    """
    return g.induced(g.mask(s))


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    m = g.mask(s)
    return all(not (g.adj[v] & m) for v in bits(m))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
