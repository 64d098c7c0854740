"""Distance layers ``L_i(S)`` around a connected source set, their
bipartiteness, the layered 4-colouring and the edge-deletion closure check."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .coloring import Coloring, is_proper
from .cycles import INFINITE_GIRTH, MembershipVerdict, girth, is_member
from .errors import (
    Disconnected,
    EmptySource,
    LayerNotBipartite,
    NoSuchEdge,
    NotInFamily,
    SourceNotConnected,
)
from .graph import Graph, bits, lowest


@dataclass(frozen=True)
class LayerDecomposition:
    source: frozenset[int]
    layers: tuple[frozenset[int], ...]
    # (side containing each component's least vertex, other side), or None
    bipartitions: tuple[tuple[frozenset[int], frozenset[int]] | None, ...]
    odd_cycles: tuple[tuple[int, ...] | None, ...]
    unreached: frozenset[int] = field(default_factory=frozenset)

    def sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def layer_of(self, v: int) -> int | None:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        return None


def two_color(g: Graph, mask: int) -> tuple[list[int], list[int]] | tuple[None, list[int]]:
    """BFS 2-colouring of ``G[mask]``.

    Components are rooted at their least vertex, which lands in side 0.
    Returns ``(side0, side1)`` or ``(None, odd_cycle)``.
    """
    side: dict[int, int] = {}
    parent: dict[int, int] = {}
    rest = mask
    while rest:
        root = lowest(rest)
        side[root] = 0
        parent[root] = -1
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y in bits(g.adj[x] & mask):
                if y not in side:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    return None, _odd_cycle(parent, x, y)
        rest &= ~g.component_of(root, mask)
    s0 = sorted(v for v, s in side.items() if s == 0)
    s1 = sorted(v for v, s in side.items() if s == 1)
    return s0, s1


def _odd_cycle(parent: dict[int, int], x: int, y: int) -> list[int]:
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    sx = set(px)
    for j, v in enumerate(py):
        if v in sx:
            return px[: px.index(v) + 1] + py[:j][::-1]
    raise AssertionError("no common ancestor")


def decompose(g: Graph, s: Iterable[int]) -> LayerDecomposition:
    src = g.mask(s)
    if not src:
        raise EmptySource("source set must be nonempty")
    dist = g.bfs_distances(src)
    depth = max((d for d in dist if d is not None), default=0)
    masks = [0] * (depth + 1)
    unreached = 0
    for v, d in enumerate(dist):
        if d is None:
            unreached |= 1 << v
        else:
            masks[d] |= 1 << v
    parts = []
    odd = []
    for m in masks:
        a, b = two_color(g, m)
        if a is None:
            parts.append(None)
            odd.append(tuple(b))
        else:
            parts.append((frozenset(a), frozenset(b)))
            odd.append(None)
    return LayerDecomposition(
        source=frozenset(bits(src)),
        layers=tuple(frozenset(bits(m)) for m in masks),
        bipartitions=tuple(parts),
        odd_cycles=tuple(odd),
        unreached=frozenset(bits(unreached)),
    )


class LayerOutcome(enum.Enum):
    HYPOTHESIS_FAILS = "HypothesisFails"
    CONCLUSION_HOLDS = "ConclusionHolds"
    THEOREM_VIOLATED = "TheoremViolated"


@dataclass(frozen=True)
class LayerTheoremVerdict:
    outcome: LayerOutcome
    layer_index: int | None = None
    odd_cycle: tuple[int, ...] | None = None
    decomposition: LayerDecomposition | None = None


def check_layer_theorem(
    g: Graph, s: Iterable[int], ell: int, membership: MembershipVerdict | None = None
) -> LayerTheoremVerdict:
    """Evaluate the bipartite-layers statement for one connected source set.

    If every layer ``1..floor(ell/2)`` is bipartite then every layer ``i > 0``
    must be.  ``membership`` may be passed to skip recomputing it.
    """
    mv = membership if membership is not None else is_member(g, ell)
    if not mv.member:
        raise NotInFamily(f"graph is not in the ell={ell} family: {mv.reason}")
    src = g.mask(s)
    if not src:
        raise EmptySource("source set must be nonempty")
    if not g.is_connected(src):
        raise SourceNotConnected("G[S] must be connected")
    dec = decompose(g, bits(src))
    q = ell // 2
    for i in range(1, min(q, len(dec.layers) - 1) + 1):
        if dec.bipartitions[i] is None:
            return LayerTheoremVerdict(LayerOutcome.HYPOTHESIS_FAILS, i, dec.odd_cycles[i], dec)
    for i in range(q + 1, len(dec.layers)):
        if dec.bipartitions[i] is None:
            return LayerTheoremVerdict(LayerOutcome.THEOREM_VIOLATED, i, dec.odd_cycles[i], dec)
    return LayerTheoremVerdict(LayerOutcome.CONCLUSION_HOLDS, decomposition=dec)


def layered_four_coloring(g: Graph, u: int, ell: int | None = None) -> Coloring:
    """Colour even layers of ``L_i(u)`` from {1, 2} and odd layers from {3, 4}.

    ``ell`` defaults to the value implied by the girth.  Raises
    :class:`LayerNotBipartite` if some layer has an odd cycle, which cannot
    happen on a family member.
    """
    g.check_vertex(u)
    if ell is None:
        gi = girth(g)
        if gi == INFINITE_GIRTH or gi % 2 == 0 or gi < 5:
            raise NotInFamily(f"girth {gi} is not of the form 2*ell+1 with ell >= 2")
        ell = (int(gi) - 1) // 2
    mv = is_member(g, ell)
    if not mv.member:
        raise NotInFamily(f"graph is not in the ell={ell} family: {mv.reason}")
    if not g.is_connected():
        raise Disconnected("layered colouring needs a connected graph")
    dec = decompose(g, [u])
    colors = [0] * g.n
    for i, part in enumerate(dec.bipartitions):
        if part is None:
            raise LayerNotBipartite(
                f"layer {i} from root {u} is not bipartite", i, dec.odd_cycles[i]
            )
        lo = 1 if i % 2 == 0 else 3
        for v in part[0]:
            colors[v] = lo
        for v in part[1]:
            colors[v] = lo + 1
    col = Coloring.from_list(colors)
    if not is_proper(g, col.colors):
        raise AssertionError("layered colouring is not proper")
    return col


# -- edge deletion ---------------------------------------------------------------


def cycle_through_edge(g: Graph, u: int, v: int, length: int) -> list[int] | None:
    """A cycle of exactly ``length`` containing edge ``uv`` (chords allowed).

    Searches for a simple ``u``-``v`` path of ``length - 1`` edges avoiding
    the edge itself, pruning on BFS distance to ``v`` in ``G - uv``.
    """
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge {u}-{v}")
    h = g.without_edge(u, v)
    to_v = h.bfs_distances(1 << v)
    target = length - 1
    if to_v[u] is None or to_v[u] > target:
        return None
    path = [u]
    used = 1 << u

    def dfs(x: int, steps: int) -> bool:
        nonlocal used
        if x == v:
            return steps == target
        for y in bits(h.adj[x] & ~used):
            d = to_v[y]
            if d is None or steps + 1 + d > target:
                continue
            if y == v and steps + 1 != target:
                continue
            path.append(y)
            used |= 1 << y
            if dfs(y, steps + 1):
                return True
            path.pop()
            used &= ~(1 << y)
        return False

    return list(path) if dfs(u, 0) else None


@dataclass(frozen=True)
class EdgeDeletionVerdict:
    edge: tuple[int, int]
    in_short_cycle: bool
    cycle: tuple[int, ...] | None
    membership_after: MembershipVerdict | None
    violated: bool


def edge_deletion_closure(
    g: Graph, e: tuple[int, int], ell: int, membership: MembershipVerdict | None = None
) -> EdgeDeletionVerdict:
    """If ``e`` lies on no ``(2*ell+1)``-cycle, ``G - e`` must stay in the family."""
    mv = membership if membership is not None else is_member(g, ell)
    if not mv.member:
        raise NotInFamily(f"graph is not in the ell={ell} family: {mv.reason}")
    u, v = e
    g.check_vertex(u)
    g.check_vertex(v)
    cyc = cycle_through_edge(g, u, v, 2 * ell + 1)
    if cyc is not None:
        return EdgeDeletionVerdict((u, v), True, tuple(cyc), None, False)
    after = is_member(g.without_edge(u, v), ell)
    return EdgeDeletionVerdict((u, v), False, None, after, not after.member)


def connected_sources(g: Graph, max_size: int = 3) -> list[tuple[int, ...]]:
    """All vertex sets of size ``1..max_size`` inducing a connected subgraph."""
    out = []
    for k in range(1, max_size + 1):
        for combo in combinations(range(g.n), k):
            if g.is_connected(g.mask(combo)):
                out.append(combo)
    return out


__all__ = [
    "LayerDecomposition",
    "LayerOutcome",
    "LayerTheoremVerdict",
    "EdgeDeletionVerdict",
    "decompose",
    "check_layer_theorem",
    "layered_four_coloring",
    "edge_deletion_closure",
    "cycle_through_edge",
    "connected_sources",
    "two_color",
]
