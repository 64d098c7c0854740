"""Canonical labelling by individualisation-refinement.

Each search-tree node is an ordered equitable partition.  Leaves (discrete
partitions) give a relabelled adjacency certificate, and the canonical form
is the largest certificate seen.  Two leaves with equal certificates yield an
automorphism; automorphisms prune children lying in the orbit of an already
explored child, and a leaf equivalent to the first leaf sends the search back
to the first-path node where it branched off.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, popcount

Certificate = tuple[int, tuple[int, ...]]


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by the vector of neighbour counts into every current
    cell; fragments are ordered by that vector so the result does not depend
    on vertex names.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                sig = tuple(popcount(a & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not changed:
            return cells


class _UnionFind:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            if b < a:
                a, b = b, a
            self.p[b] = a


@dataclass(frozen=True)
class CanonicalLabeling:
    form: Certificate
    # order[i] is the original vertex that receives canonical label i
    order: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    # least vertex of each vertex's automorphism orbit
    orbits: tuple[int, ...]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.first_cert = None
        self.first_order = None
        self.best_cert = None
        self.best_order = None
        self.autos: list[tuple[int, ...]] = []

    def certificate(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        out = []
        adj = self.adj
        for v in order:
            m = 0
            a = adj[v]
            while a:
                low = a & -a
                m |= 1 << pos[low.bit_length() - 1]
                a ^= low
            out.append(m)
        return tuple(out)

    def _auto(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * len(src)
        for a, b in zip(src, dst):
            perm[a] = b
        perm_t = tuple(perm)
        if any(perm_t[i] != i for i in range(len(perm_t))) and perm_t not in self.autos:
            self.autos.append(perm_t)

    def _orbit_find(self, prefix: list[int]) -> _UnionFind:
        uf = _UnionFind(self.g.n)
        for perm in self.autos:
            if all(perm[v] == v for v in prefix):
                for i, j in enumerate(perm):
                    uf.union(i, j)
        return uf

    def visit(self, cells: list[list[int]], prefix: list[int], first_path: bool) -> bool:
        """Explore a node; return True to unwind to the nearest first-path node."""
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = self.certificate(order)
            if self.first_cert is None:
                self.first_cert = self.best_cert = cert
                self.first_order = self.best_order = order
                return False
            if cert == self.first_cert:
                self._auto(self.first_order, order)
                return True
            if cert > self.best_cert:
                self.best_cert, self.best_order = cert, order
            elif cert == self.best_cert:
                self._auto(self.best_order, order)
            return False
        explored: list[int] = []
        n_autos = -1
        uf = None
        for v in cells[target]:
            if explored:
                if n_autos != len(self.autos):
                    uf = self._orbit_find(prefix)
                    n_autos = len(self.autos)
                rv = uf.find(v)
                if any(uf.find(w) == rv for w in explored):
                    continue
            child = (
                cells[:target]
                + [[v], [w for w in cells[target] if w != v]]
                + cells[target + 1 :]
            )
            child = refine(self.adj, child)
            jump = self.visit(child, prefix + [v], first_path and not explored)
            explored.append(v)
            if jump and not first_path:
                return True
        return False


def canonical_labeling(g: Graph) -> CanonicalLabeling:
    n = g.n
    if n == 0:
        return CanonicalLabeling((0, ()), (), (), ())
    s = _Search(g)
    s.visit(refine(g.adj, [list(range(n))]), [], True)
    uf = s._orbit_find([])
    return CanonicalLabeling(
        form=(n, s.best_cert),
        order=tuple(s.best_order),
        generators=tuple(s.autos),
        orbits=tuple(uf.find(v) for v in range(n)),
    )


def canonical_form(g: Graph) -> Certificate:
    return canonical_labeling(g).form


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative: ``g`` relabelled by its canonical order."""
    lab = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(lab.order):
        pos[v] = i
    return Graph.from_edge_list(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


_PETERSEN_FORM: Certificate | None = None


def is_petersen(g: Graph) -> bool:
    global _PETERSEN_FORM
    if g.n != 10 or g.edge_count != 15 or any(d != 3 for d in g.degrees()):
        return False
    if _PETERSEN_FORM is None:
        from .named import petersen

        _PETERSEN_FORM = canonical_form(petersen())
    return canonical_form(g) == _PETERSEN_FORM
