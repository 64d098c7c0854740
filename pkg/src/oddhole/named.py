"""The fixed small graphs the theory is phrased around, with pinned labelings.

Petersen graph: outer cycle ``u_i = i`` and inner pentagram ``v_i = 5 + i``
for ``i = 0..4``, edges ``u_i u_{i+1}``, ``v_i v_{i+2}`` and spokes ``u_i v_i``.

theta_plus: the 8-cycle ``0..7`` with chords ``0-4`` and ``2-6``.  It is the
Petersen graph minus two adjacent vertices.

theta: theta_plus without chord ``2-6`` (an edge joining two degree-3 vertices).

theta_minus: Petersen minus the induced path ``u_0 u_1 u_2``, relabelled in
ascending order of the surviving Petersen ids ``3, 4, 5, 6, 7, 8, 9``.  Any
induced 3-vertex path gives an isomorphic result.

p_minus: Petersen minus vertex 0, relabelled ``1..9 -> 0..8``.
"""

from __future__ import annotations

from .graph import Graph

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, 5 + i) for i in range(5)]
)

THETA_PLUS_EDGES = [(i, (i + 1) % 8) for i in range(8)] + [(0, 4), (2, 6)]


def petersen() -> Graph:
    return Graph.from_edge_list(10, PETERSEN_EDGES)


def theta_plus() -> Graph:
    return Graph.from_edge_list(8, THETA_PLUS_EDGES)


def theta() -> Graph:
    return theta_plus().without_edge(2, 6)


def theta_minus() -> Graph:
    g = petersen()
    keep = g.full & ~0b111
    return g.induced(keep)[0]


def p_minus() -> Graph:
    g = petersen()
    return g.induced(g.full & ~1)[0]


NAMED = {
    "petersen": petersen,
    "theta+": theta_plus,
    "theta": theta,
    "theta-": theta_minus,
    "p-": p_minus,
}

# aliases used by PatternEmbedding.pattern_name
PATTERN_NAMES = {
    "petersen": "petersen",
    "theta_plus": "theta+",
    "theta": "theta",
    "theta_minus": "theta-",
    "p_minus": "p-",
}


def by_name(name: str) -> Graph:
    key = PATTERN_NAMES.get(name, name)
    try:
        return NAMED[key]()
    except KeyError:
        raise KeyError(f"unknown named graph {name!r}; choose from {sorted(NAMED)}") from None
