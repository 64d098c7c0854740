"""Exact colouring (DSATUR backtracking), 4-critical membership, and Kempe
chains.  Colours are positive integers ``1..k``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cycles import clique_number, is_member
from .errors import ImproperColoring, InvalidVertex
from .graph import Graph, bits, popcount


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @classmethod
    def from_list(cls, colors: Sequence[int]) -> "Coloring":
        if any(c < 1 for c in colors):
            raise ValueError("colours must be positive integers")
        return cls(tuple(colors))

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=0)

    def used(self) -> set[int]:
        return set(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n or any(c is None or c < 1 for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper ``k``-colouring, or ``None`` if none exists.

    DSATUR order: most distinct neighbour colours first, then most uncoloured
    neighbours, ties to the least vertex id.  A vertex may only open colour
    ``max_used + 1``, which removes colour-permutation symmetry.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n == 0:
        return Coloring(())
    adj = g.adj
    color = [0] * n
    # forbidden[v]: bitmask of colours (bit c) present on coloured neighbours
    forbidden = [0] * n
    uncolored = g.full

    def pick() -> int:
        best = -1
        key = (-1, -1)
        for v in bits(uncolored):
            kv = (popcount(forbidden[v]), popcount(adj[v] & uncolored))
            if kv > key:
                key, best = kv, v
        return best

    def solve(used: int) -> bool:
        nonlocal uncolored
        if not uncolored:
            return True
        v = pick()
        uncolored &= ~(1 << v)
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            if forbidden[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            for w in bits(adj[v] & uncolored):
                if not forbidden[w] >> c & 1:
                    forbidden[w] |= 1 << c
                    touched.append(w)
            if solve(max(used, c)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
        color[v] = 0
        uncolored |= 1 << v
        return False

    if not solve(0):
        return None
    return Coloring(tuple(color))


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness using exactly that many colours."""
    if g.n == 0:
        return 0, Coloring(())
    k = max(1, clique_number(g))
    while True:
        col = k_colorable(g, k)
        if col is not None:
            return k, col
        k += 1


def chromatic_number_naive(g: Graph) -> int:
    """Reference oracle: smallest ``k`` for which some map in ``[k]^n`` is proper."""
    from itertools import product

    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        # vertex 0 fixed to colour 1 by symmetry
        for rest in product(range(1, k + 1), repeat=g.n - 1):
            colors = (1,) + rest
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return g.n


@dataclass(frozen=True)
class G0Verdict:
    member: bool
    reason: str
    chromatic_number: int | None = None
    non_critical_edge: tuple[int, int] | None = None


def is_in_g0(g: Graph) -> G0Verdict:
    """4-critical members of the ell=2 family.

    Edge-criticality suffices: every proper subgraph lies inside some
    ``G - e`` (or is ``G`` minus vertices, contained in ``G - e`` for an
    incident edge), and chromatic number is monotone under subgraphs.
    """
    mv = is_member(g, 2)
    if not mv.member:
        return G0Verdict(False, f"not in the ell=2 family: {mv.reason}")
    chi, _ = chromatic_number(g)
    if chi != 4:
        return G0Verdict(False, f"chromatic number is {chi}, not 4", chi)
    for u, v in g.edges():
        if k_colorable(g.without_edge(u, v), 3) is None:
            return G0Verdict(False, f"G - {u}{v} still needs 4 colours", chi, (u, v))
    return G0Verdict(True, "4-chromatic and edge-critical", chi)


# -- Kempe chains -------------------------------------------------------------------


@dataclass(frozen=True)
class KempeQuery:
    coloring: Coloring
    i: int
    j: int
    x: int
    y: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("Kempe colours must differ")
        if self.x == self.y:
            raise ValueError("Kempe endpoints must differ")


def _class_mask(coloring: Coloring, colors: set[int]) -> int:
    m = 0
    for v, c in enumerate(coloring.colors):
        if c in colors:
            m |= 1 << v
    return m


def kempe_path_exists(g: Graph, q: KempeQuery) -> list[int] | None:
    """Shortest ``x``-``y`` path whose vertices alternate colours ``i`` and ``j``.

    Under a proper colouring any path inside the union of the two colour
    classes alternates, so this is BFS in that induced subgraph.
    """
    if not is_proper(g, q.coloring.colors):
        raise ImproperColoring("Kempe query needs a proper colouring of g")
    for v in (q.x, q.y):
        if not 0 <= v < g.n:
            raise InvalidVertex(f"vertex {v} out of range")
    allowed = _class_mask(q.coloring, {q.i, q.j})
    if not (allowed >> q.x & 1 and allowed >> q.y & 1):
        return None
    parent = {q.x: -1}
    frontier = [q.x]
    while frontier:
        nxt = []
        for a in frontier:
            for b in bits(g.adj[a] & allowed):
                if b not in parent:
                    parent[b] = a
                    nxt.append(b)
        if q.y in parent:
            break
        frontier = nxt
    if q.y not in parent:
        return None
    path = [q.y]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path[::-1]


def kempe_swap(g: Graph, coloring: Coloring, i: int, j: int, x: int) -> Coloring:
    """Exchange colours ``i`` and ``j`` on the ``(i, j)``-component containing ``x``."""
    if not is_proper(g, coloring.colors):
        raise ImproperColoring("Kempe swap needs a proper colouring of g")
    allowed = _class_mask(coloring, {i, j})
    if not allowed >> x & 1:
        return coloring
    comp = g.component_of(x, allowed)
    colors = list(coloring.colors)
    for v in bits(comp):
        colors[v] = j if colors[v] == i else i
    return Coloring(tuple(colors))
