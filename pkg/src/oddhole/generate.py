"""Isomorph-free generation of connected graphs of bounded girth.

Vertex-by-vertex canonical augmentation: a child ``P + x`` is kept only when
``x`` lies in the automorphism orbit of the child's canonical deletion vertex
(the non-cut vertex of largest invariant, ties broken by canonical label), and
children of one parent are deduplicated by canonical form.  A new vertex may
only join vertices pairwise at distance >= ``min_girth - 2``, so no cycle
shorter than ``min_girth`` ever appears.
"""

from __future__ import annotations

import logging
from typing import Iterator

from .canon import canonical_labeling
from .graph import Graph, bits

log = logging.getLogger(__name__)

MIN_MAX_N = 5
DEFAULT_MAX_N_LIMIT = 12


def _balls(g: Graph, radius: int) -> list[int]:
    out = []
    for v in range(g.n):
        m = 1 << v
        for _ in range(radius):
            grow = m
            for w in bits(m):
                grow |= g.adj[w]
            m = grow
        out.append(m)
    return out


def extension_sets(g: Graph, min_girth: int = 5) -> Iterator[tuple[int, ...]]:
    """Nonempty vertex sets whose members are pairwise at distance
    >= ``min_girth - 2``, the possible neighbourhoods of a new vertex."""
    close = _balls(g, max(0, min_girth - 3))
    n = g.n

    def rec(start: int, chosen: list[int], banned: int) -> Iterator[tuple[int, ...]]:
        for v in range(start, n):
            if banned >> v & 1:
                continue
            chosen.append(v)
            yield tuple(chosen)
            yield from rec(v + 1, chosen, banned | close[v])
            chosen.pop()

    yield from rec(0, [], 0)


def _invariant(g: Graph, v: int, deg: list[int]) -> tuple:
    return (deg[v], tuple(sorted(deg[w] for w in bits(g.adj[v]))))


def _is_cut_vertex(g: Graph, v: int) -> bool:
    rest = g.full & ~(1 << v)
    return bool(rest) and not g.is_connected(rest)


def _accept(child: Graph):
    """Return the canonical labelling if the last vertex is a canonical
    deletion vertex of ``child``, else ``None``."""
    x = child.n - 1
    deg = child.degrees()
    inv = [_invariant(child, v, deg) for v in range(child.n)]
    mine = inv[x]
    # x never disconnects the child since the parent is connected
    for v in range(x):
        if inv[v] > mine and not _is_cut_vertex(child, v):
            return None
    lab = canonical_labeling(child)
    best = None
    for pos in range(child.n - 1, -1, -1):
        v = lab.order[pos]
        if inv[v] == mine and not _is_cut_vertex(child, v):
            best = v
            break
    if lab.orbits[best] != lab.orbits[x]:
        return None
    return lab


def _augment(parent: Graph, min_girth: int) -> list[Graph]:
    n = parent.n
    out = []
    seen = set()
    for s in extension_sets(parent, min_girth):
        smask = 0
        for v in s:
            smask |= 1 << v
        adj = [a | (1 << n) if smask >> i & 1 else a for i, a in enumerate(parent.adj)]
        adj.append(smask)
        child = Graph(n + 1, tuple(adj), parent.edge_count + len(s))
        lab = _accept(child)
        if lab is None or lab.form in seen:
            continue
        seen.add(lab.form)
        out.append(child)
    return out


def enumerate_girth5(max_n: int, *, allow_large: bool = False) -> Iterator[Graph]:
    """Every connected graph of girth >= 5 (trees included) on 1..max_n
    vertices, once per isomorphism class, in a fixed order."""
    if max_n < MIN_MAX_N:
        raise ValueError(f"max_n must be >= {MIN_MAX_N}, got {max_n}")
    if max_n > DEFAULT_MAX_N_LIMIT:
        if not allow_large:
            raise ValueError(
                f"max_n={max_n} exceeds the guard rail {DEFAULT_MAX_N_LIMIT}; pass allow_large=True"
            )
        log.warning("enumerating girth>=5 graphs up to n=%d; this may take very long", max_n)
    yield from enumerate_connected(max_n, min_girth=5)


def enumerate_connected(max_n: int, min_girth: int = 3) -> Iterator[Graph]:
    """Every connected graph on 1..max_n vertices with no cycle shorter than
    ``min_girth``, once per isomorphism class."""
    if min_girth < 3:
        raise ValueError(f"min_girth must be >= 3, got {min_girth}")
    if max_n < 1:
        return
    level = [Graph(1, (0,), 0)]
    yield level[0]
    for n in range(2, max_n + 1):
        nxt = []
        for parent in level:
            nxt.extend(_augment(parent, min_girth))
        log.debug("n=%d: %d graphs", n, len(nxt))
        yield from nxt
        level = nxt
