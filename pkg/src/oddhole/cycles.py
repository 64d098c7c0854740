"""Girth, chordless-cycle enumeration, odd-hole search and family membership."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal

from .graph import Graph, bits, lowest, popcount

INFINITE_GIRTH = math.inf

Parity = Literal["any", "odd", "even"]


@dataclass(frozen=True)
class HoleWitness:
    """A chordless cycle listed in cyclic order.

    Canonical orientation: starts at the least vertex and its second entry is
    the smaller of that vertex's two cycle neighbours.
    """

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))]

    def is_chordless_cycle_of(self, g: Graph) -> bool:
        return is_induced_cycle(g, self.vertices)


def canonical_cycle(vertices) -> tuple[int, ...]:
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def is_induced_cycle(g: Graph, vertices) -> bool:
    """True iff ``vertices`` (cyclic order) is a chordless cycle of ``g``."""
    vs = list(vertices)
    k = len(vs)
    if k < 3 or len(set(vs)) != k or any(not 0 <= v < g.n for v in vs):
        return False
    mask = 0
    for v in vs:
        mask |= 1 << v
    for i, v in enumerate(vs):
        want = (1 << vs[i - 1]) | (1 << vs[(i + 1) % k])
        if g.adj[v] & mask != want:
            return False
    return True


# -- girth -------------------------------------------------------------------


def shortest_cycle(g: Graph) -> list[int] | None:
    """A shortest cycle in cyclic order, or ``None`` for a forest.

    One BFS per root; a non-tree edge ``xy`` closes a cycle of length
    ``d(x) + d(y) + 1`` through the root, and the minimum over all roots is
    the girth.
    """
    best_len = math.inf
    best = None
    for r in range(g.n):
        if best_len == 3:
            break
        dist = {r: 0}
        parent = {r: -1}
        queue = [r]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            if 2 * dist[x] + 1 >= best_len:
                break
            for y in bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x] and parent.get(y) != x:
                    length = dist[x] + dist[y] + 1
                    if length < best_len:
                        best_len = length
                        best = _close(parent, x, y)
    return best


def _close(parent: dict[int, int], x: int, y: int) -> list[int]:
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    # both walks end at the root; drop the shared tail beyond the first meeting
    sx = set(px)
    for j, v in enumerate(py):
        if v in sx:
            i = px.index(v)
            return px[: i + 1] + py[:j][::-1]
    raise AssertionError("BFS walks did not meet")


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    c = shortest_cycle(g)
    return INFINITE_GIRTH if c is None else len(c)


# -- chordless cycles ----------------------------------------------------------


def _parity_ok(length: int, parity: Parity) -> bool:
    if parity == "any":
        return True
    if parity == "odd":
        return length % 2 == 1
    if parity == "even":
        return length % 2 == 0
    raise ValueError(f"parity must be any|odd|even, got {parity!r}")


def enumerate_chordless_cycles(
    g: Graph, min_len: int = 4, max_len: int | None = None, parity: Parity = "any"
) -> Iterator[HoleWitness]:
    """Yield each chordless cycle with length in ``[min_len, max_len]`` once.

    DFS from each anchor ``a`` (the least vertex of the cycle) along induced
    paths ``a p1 ... pk``: a candidate must neighbour ``pk``, exceed ``a`` and
    avoid the closed neighbourhoods of ``p1..p(k-1)``.  A candidate adjacent to
    ``a`` closes the cycle; it is reported only when it exceeds ``p1`` so each
    cycle appears in one orientation.
    """
    if max_len is None:
        max_len = g.n
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    _parity_ok(3, parity)
    if min_len > max_len:
        return
    adj = g.adj
    for a in range(g.n):
        above = g.full & ~((2 << a) - 1)
        for p1 in bits(adj[a] & above):
            # blocked: path vertices plus neighbours of every interior vertex but the last
            stack = [([a, p1], (1 << a) | (1 << p1))]
            while stack:
                path, blocked = stack.pop()
                last = path[-1]
                length = len(path) + 1
                grow = blocked | adj[last]
                for x in sorted(bits(adj[last] & above & ~blocked), reverse=True):
                    if adj[x] >> a & 1:
                        if x > p1 and length >= min_len and _parity_ok(length, parity):
                            yield HoleWitness(tuple(path + [x]))
                    elif length < max_len:
                        stack.append((path + [x], grow | (1 << x)))


def find_odd_hole_at_least(g: Graph, k: int) -> HoleWitness | None:
    """Some chordless odd cycle of length ``>= k``, or ``None``."""
    if k % 2 == 0 or k < 5:
        raise ValueError(f"k must be odd and >= 5, got {k}")
    for c in enumerate_chordless_cycles(g, k, g.n, "odd"):
        return c
    return None


# -- family membership -----------------------------------------------------------


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    ell: int
    girth: float | int
    violation: HoleWitness | None = None
    reason: str = ""


def is_member(g: Graph, ell: int) -> MembershipVerdict:
    """Membership in the family: girth exactly ``2*ell+1`` and no odd hole of
    length ``>= 2*ell+3``."""
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    cyc = shortest_cycle(g)
    gi = INFINITE_GIRTH if cyc is None else len(cyc)
    if gi != 2 * ell + 1:
        witness = HoleWitness(canonical_cycle(cyc)) if cyc is not None else None
        return MembershipVerdict(False, ell, gi, witness, f"girth {gi} != {2 * ell + 1}")
    hole = find_odd_hole_at_least(g, 2 * ell + 3)
    if hole is not None:
        return MembershipVerdict(False, ell, gi, hole, f"odd hole of length {hole.length}")
    return MembershipVerdict(True, ell, gi)


def family_ell(g: Graph) -> int | None:
    """The unique ``ell >= 2`` with ``g`` in the family, if any."""
    gi = girth(g)
    if gi == INFINITE_GIRTH or gi % 2 == 0 or gi < 5:
        return None
    ell = (int(gi) - 1) // 2
    return ell if is_member(g, ell).member else None


# -- cliques ------------------------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Exact clique number via bitset Bron-Kerbosch with pivoting."""
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    adj = g.adj
    best = 1

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            if not excl and size > best:
                best = size
            return
        if size + popcount(cand) <= best:
            return
        pivot = lowest(cand | excl)
        pmax = -1
        for u in bits(cand | excl):
            c = popcount(cand & adj[u])
            if c > pmax:
                pmax, pivot = c, u
        for v in bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, g.full, 0)
    return best
