"""Randomised invariants over small graphs."""

from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from oddhole.canon import are_isomorphic, canonical_form
from oddhole.coloring import (
    KempeQuery,
    chromatic_number,
    is_proper,
    k_colorable,
    kempe_path_exists,
    kempe_swap,
)
from oddhole.cycles import enumerate_chordless_cycles, family_ell, is_induced_cycle
from oddhole.errors import HypothesisViolated
from oddhole.generate import enumerate_girth5
from oddhole.graph import Graph
from oddhole.io import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from oddhole.layers import decompose, layered_four_coloring
from oddhole.named import by_name
from oddhole.structure import (
    cutset_report,
    ear_hypotheses,
    enumerate_cutsets,
    find_induced_pattern,
    find_strong_ear,
    is_induced_embedding,
    is_k_connected,
    is_strong_ear,
)

SETTINGS = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edge_list(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graph_and_perm(draw, max_n=9):
    g = draw(graphs(max_n))
    perm = draw(st.permutations(range(g.n)))
    h = Graph.from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    return g, h


@SETTINGS
@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert decode_graph6(encode_graph6(g)) == g
    assert parse_edge_list(format_edge_list(g)) == g


@SETTINGS
@given(graph_and_perm())
def test_canonical_form_is_invariant(pair):
    g, h = pair
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(g, h)


@SETTINGS
@given(graphs())
def test_exact_colouring(g):
    chi, col = chromatic_number(g)
    assert is_proper(g, col.colors) and col.palette_size == chi
    if chi > 1:
        assert k_colorable(g, chi - 1) is None
    assert chi == oracles.chromatic_number(g.n, g.edges())


@SETTINGS
@given(graphs())
def test_holes_are_chordless_and_distinct(g):
    holes = list(enumerate_chordless_cycles(g, 4))
    assert len({frozenset(h.vertices) for h in holes}) == len(holes)
    for h in holes:
        assert is_induced_cycle(g, h.vertices) and h.length >= 4
    assert {frozenset(h.vertices) for h in holes} == oracles.chordless_cycle_sets(g.n, g.edges())


@SETTINGS
@given(graphs(max_n=8, min_n=1), st.data())
def test_layers_are_bfs_distances(g, data):
    root = data.draw(st.integers(0, g.n - 1))
    dec = decompose(g, [root])
    dist = oracles.distances_from(g.n, g.edges(), [root])
    for v in range(g.n):
        assert dec.layer_of(v) == dist.get(v)


@SETTINGS
@given(graphs(max_n=8), st.integers(1, 3))
def test_k_connectivity_matches_oracle(g, k):
    assert is_k_connected(g, k) == oracles.is_k_connected(g.n, g.edges(), k)


@SETTINGS
@given(graphs(max_n=8), st.integers(1, 3))
def test_cutset_reports_reverify(g, size):
    for rep in enumerate_cutsets(g, size):
        again = cutset_report(g, rep.cutset)
        assert again == rep and rep.component_count >= 2
        rest = set(range(g.n)) - rep.cutset
        assert set().union(*rep.components) == rest


@SETTINGS
@given(graphs(max_n=8, min_n=1), st.data())
def test_kempe_swap_keeps_colouring_proper(g, data):
    _, col = chromatic_number(g)
    x = data.draw(st.integers(0, g.n - 1))
    i = col.colors[x]
    j = data.draw(st.integers(1, max(2, col.palette_size)).filter(lambda c: c != i))
    swapped = kempe_swap(g, col, i, j, x)
    assert is_proper(g, swapped.colors) and swapped.colors[x] == j
    for y in range(g.n):
        if y != x:
            path = kempe_path_exists(g, KempeQuery(col, i, j, x, y))
            if path is not None:
                assert path[0] == x and path[-1] == y
                assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
                assert {col.colors[v] for v in path} <= {i, j}


@SETTINGS
@given(graphs(max_n=9))
def test_pattern_embeddings_are_induced(g):
    for name in ("theta", "theta-", "p-"):
        emb = find_induced_pattern(g, name)
        if emb is not None:
            assert is_induced_embedding(g, by_name(name), emb.map)


@lru_cache(maxsize=None)
def _members():
    return tuple(g for g in enumerate_girth5(10) if family_ell(g) is not None)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.data())
def test_member_invariants(data):
    members = _members()
    g = members[data.draw(st.integers(0, len(members) - 1), label="index")]
    root = data.draw(st.integers(0, g.n - 1), label="root")
    col = layered_four_coloring(g, root)
    assert is_proper(g, col.colors) and max(col.colors) <= 4
    three = is_k_connected(g, 3)
    for h in enumerate_chordless_cycles(g, 5, parity="odd"):
        if ear_hypotheses(g, g.mask(h.vertices), three) is None:
            ear = find_strong_ear(g, h.vertices, three)
            assert ear is not None and is_strong_ear(g, ear.path, h.vertices)
        else:
            with pytest.raises(HypothesisViolated):
                find_strong_ear(g, h.vertices, three)
