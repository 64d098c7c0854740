"""Connectivity, cutsets, strong induced ears, induced-pattern search and
edge-sharing 5-holes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .cycles import HoleWitness, enumerate_chordless_cycles, is_induced_cycle
from .errors import HypothesisViolated, InvalidEmbedding, NotAFiveHole
from .graph import Graph, bits, popcount
from .named import by_name, theta_plus


# -- connectivity --------------------------------------------------------------


def local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Number of internally disjoint ``s``-``t`` paths (``s``, ``t`` nonadjacent).

    Unit-capacity augmenting paths on the vertex-split network: vertex ``v``
    becomes ``2v -> 2v+1`` with capacity 1 except at ``s`` and ``t``.
    Stops once ``cap`` paths are found.
    """
    n = g.n
    # residual capacities keyed by (a, b)
    res: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in res:
            out[a].append(b)
            out[b].append(a)
            res[(a, b)] = 0
            res.setdefault((b, a), 0)
        res[(a, b)] += c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    limit = cap if cap is not None else n
    while flow < limit:
        prev = {source: -1}
        q = deque([source])
        while q and sink not in prev:
            a = q.popleft()
            for b in out[a]:
                if b not in prev and res[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] != -1:
            a = prev[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    return flow


def is_k_connected(g: Graph, k: int) -> bool:
    """``n > k`` and no fewer than ``k`` vertices disconnect ``g``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n <= k:
        return False
    if not g.is_connected():
        return False
    if k == 1:
        return True
    if g.min_degree() < k:
        return False
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t) and local_connectivity(g, s, t, k) < k:
                return False
    return True


def vertex_connectivity(g: Graph) -> int:
    if g.n == 0 or not g.is_connected():
        return 0
    k = 0
    while k + 1 < g.n and is_k_connected(g, k + 1):
        k += 1
    return k


# -- cutsets ----------------------------------------------------------------------


@dataclass(frozen=True)
class CutsetReport:
    cutset: frozenset[int]
    stable: bool
    component_count: int
    components: tuple[frozenset[int], ...]


def cutset_report(g: Graph, cut: Iterable[int]) -> CutsetReport | None:
    """Report for ``cut`` if removing it leaves >= 2 nonempty components."""
    m = g.mask(cut)
    rest = g.full & ~m
    comps = g.components(rest)
    if len(comps) < 2:
        return None
    stable = all(not (g.adj[v] & m) for v in bits(m))
    return CutsetReport(
        frozenset(bits(m)), stable, len(comps), tuple(frozenset(bits(c)) for c in comps)
    )


def is_cutset(g: Graph, cut: Iterable[int]) -> bool:
    rest = g.full & ~g.mask(cut)
    return bool(rest) and not g.is_connected(rest)


def enumerate_cutsets(g: Graph, size: int) -> Iterator[CutsetReport]:
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    for combo in combinations(range(g.n), size):
        rep = cutset_report(g, combo)
        if rep is not None:
            yield rep


def all_cutsets_stable(g: Graph, size: int = 3) -> CutsetReport | None:
    """First unstable cutset of the given size, or ``None`` if all are stable."""
    for rep in enumerate_cutsets(g, size):
        if not rep.stable:
            return rep
    return None


def neighborhood_cutset_check(g: Graph, u: int) -> list[tuple[int, int, int]]:
    """Triples ``T`` of neighbours of ``u`` for which ``{u} | T`` is a cutset."""
    g.check_vertex(u)
    found = []
    for t in combinations(g.neighbors(u), 3):
        if is_cutset(g, (u, *t)):
            found.append(t)
    return found


def find_unstable_cutset_on_5cycle(g: Graph, c: HoleWitness | Iterable[int]) -> CutsetReport | None:
    """First cutset ``{c[i], c[i+1], w}`` with ``w`` another vertex of the 5-hole.

    Scan order: ``i = 0..4``, then ``w`` in the order the hole lists them.
    """
    vs = tuple(c.vertices if isinstance(c, HoleWitness) else c)
    if len(vs) != 5 or not is_induced_cycle(g, vs):
        raise NotAFiveHole(f"{vs} is not an induced 5-cycle")
    for i in range(5):
        a, b = vs[i], vs[(i + 1) % 5]
        for w in vs:
            if w in (a, b):
                continue
            rep = cutset_report(g, (a, b, w))
            if rep is not None:
                return rep
    return None


# -- ears ----------------------------------------------------------------------------


@dataclass(frozen=True)
class EarWitness:
    path: tuple[int, ...]
    host: frozenset[int]

    @property
    def attachments(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    @property
    def length(self) -> int:
        return len(self.path) - 1


def is_induced_path(g: Graph, path) -> bool:
    vs = list(path)
    if len(set(vs)) != len(vs):
        return False
    m = g.mask(vs)
    for i, v in enumerate(vs):
        want = 0
        if i > 0:
            want |= 1 << vs[i - 1]
        if i + 1 < len(vs):
            want |= 1 << vs[i + 1]
        if g.adj[v] & m != want:
            return False
    return True


def is_strong_ear(g: Graph, path, host: Iterable[int]) -> bool:
    """Induced ear with nonadjacent attachments whose interior only touches
    ``H`` at the attachments and their common neighbours in ``H``."""
    vs = list(path)
    h = g.mask(host)
    if len(vs) < 3:
        return False
    x, y = vs[0], vs[-1]
    if not (h >> x & 1 and h >> y & 1) or g.has_edge(x, y):
        return False
    interior = g.mask(vs[1:-1])
    if interior & h:
        return False
    if not is_induced_path(g, vs):
        return False
    allowed = (1 << x) | (1 << y) | (g.adj[x] & g.adj[y] & h)
    return all(not (g.adj[v] & h & ~allowed) for v in bits(interior))


def ear_hypotheses(g: Graph, h: int, connected_3: bool | None = None) -> str | None:
    """Name of the first failing hypothesis for ear existence, else ``None``."""
    if popcount(h) < 3:
        return "|H| >= 3"
    if h == g.full:
        return "H is a proper subgraph"
    if connected_3 is None:
        connected_3 = is_k_connected(g, 3)
    if not connected_3:
        return "G is 3-connected"
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return "G is triangle-free"
    for v in bits(g.full & ~h):
        if popcount(g.adj[v] & h) > 1:
            return f"vertex {v} outside H has at most one neighbour in H"
    return None


def find_strong_ear(g: Graph, h: Iterable[int], connected_3: bool | None = None) -> EarWitness | None:
    """Shortest path joining two nonadjacent vertices of ``H`` through
    ``V(G) - H``, returned only if it is a strong induced ear.

    Raises :class:`HypothesisViolated` naming the failing clause.  A ``None``
    result under satisfied hypotheses contradicts the existence guarantee.
    """
    hm = g.mask(h)
    clause = ear_hypotheses(g, hm, connected_3)
    if clause is not None:
        raise HypothesisViolated(clause)
    outside = g.full & ~hm
    best = None
    for x in bits(hm):
        # BFS from x with every interior vertex outside H
        parent = {x: -1}
        frontier = [x]
        depth = 0
        found = None
        while frontier and found is None:
            if best is not None and depth + 1 >= len(best) - 1:
                break
            nxt = []
            for a in frontier:
                for b in bits(g.adj[a] & outside):
                    if b not in parent:
                        parent[b] = a
                        nxt.append(b)
            depth += 1
            for b in nxt:
                ys = g.adj[b] & hm & ~g.adj[x] & ~(1 << x)
                if ys:
                    found = (b, (ys & -ys).bit_length() - 1)
                    break
            frontier = nxt
        if found is None:
            continue
        b, y = found
        path = [y, b]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        path.reverse()
        if best is None or len(path) < len(best):
            best = path
    if best is None:
        return None
    ear = EarWitness(tuple(best), frozenset(bits(hm)))
    return ear if is_strong_ear(g, ear.path, ear.host) else None


# -- induced patterns ------------------------------------------------------------------


@dataclass(frozen=True)
class PatternEmbedding:
    pattern_name: str
    # map[i] is the host vertex of pattern vertex i
    map: tuple[int, ...]


def _all_distances(g: Graph) -> list[list[int | None]]:
    return [g.bfs_distances(1 << v) for v in range(g.n)]


def is_induced_embedding(host: Graph, pattern: Graph, mapping) -> bool:
    m = list(mapping)
    if len(m) != pattern.n or len(set(m)) != len(m):
        return False
    if any(not 0 <= v < host.n for v in m):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != host.has_edge(m[i], m[j]):
                return False
    return True


def find_induced_pattern(g: Graph, pattern: Graph | str, name: str | None = None) -> PatternEmbedding | None:
    """First induced embedding of ``pattern`` in ``g`` under a fixed order.

    Pattern vertices go in descending degree (ties by id); host candidates
    ascend.  A host vertex must have at least the pattern degree, match
    adjacency to every placed vertex, and sit no farther from each placed
    vertex than the pattern distance.
    """
    if isinstance(pattern, str):
        name = name or pattern
        pattern = by_name(pattern)
    name = name or "custom"
    k = pattern.n
    if k == 0:
        return PatternEmbedding(name, ())
    if k > g.n or pattern.edge_count > g.edge_count:
        return None
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    order = sorted(range(k), key=lambda p: (-pdeg[p], p))
    pdist = _all_distances(pattern)
    hdist = _all_distances(g)
    assign = [-1] * k
    used = 0

    def place(idx: int) -> bool:
        nonlocal used
        if idx == k:
            return True
        p = order[idx]
        placed = order[:idx]
        for h in range(g.n):
            if used >> h & 1 or hdeg[h] < pdeg[p]:
                continue
            ok = True
            for q in placed:
                hq = assign[q]
                if pattern.has_edge(p, q) != g.has_edge(h, hq):
                    ok = False
                    break
                dp = pdist[p][q]
                if dp is not None:
                    dh = hdist[h][hq]
                    if dh is None or dh > dp:
                        ok = False
                        break
            if not ok:
                continue
            assign[p] = h
            used |= 1 << h
            if place(idx + 1):
                return True
            used &= ~(1 << h)
            assign[p] = -1
        return False

    if not place(0):
        return None
    return PatternEmbedding(name, tuple(assign))


# -- 5-holes sharing an edge ---------------------------------------------------------------


def five_holes(g: Graph) -> list[HoleWitness]:
    return list(enumerate_chordless_cycles(g, 5, 5))


def five_cycles_sharing_edge(
    g: Graph, holes: list[HoleWitness] | None = None
) -> tuple[HoleWitness, HoleWitness] | None:
    """Two distinct induced 5-cycles with a common edge, or ``None``."""
    first: dict[tuple[int, int], HoleWitness] = {}
    for c in holes if holes is not None else enumerate_chordless_cycles(g, 5, 5):
        for e in c.edges():
            if e in first:
                return first[e], c
        for e in c.edges():
            first[e] = c
    return None


# -- bad ears of an embedded theta+ ----------------------------------------------------------


def bad_ears(g: Graph, emb: PatternEmbedding | Iterable[int]) -> list[EarWitness]:
    """Length-3 strong induced ears of an embedded theta+ attached at
    ``v_i, v_{i+2}`` for odd ``i`` (indices mod 8, theta+ labelling)."""
    m = tuple(emb.map if isinstance(emb, PatternEmbedding) else emb)
    if not is_induced_embedding(g, theta_plus(), m):
        raise InvalidEmbedding("mapping is not an induced theta+ embedding")
    h = g.mask(m)
    host = frozenset(m)
    outside = g.full & ~h
    out = []
    for i in (1, 3, 5, 7):
        a, b = m[i], m[(i + 2) % 8]
        for p in bits(g.adj[a] & outside):
            for q in bits(g.adj[p] & g.adj[b] & outside):
                path = (a, p, q, b)
                if is_strong_ear(g, path, host):
                    out.append(EarWitness(path, host))
    return out
