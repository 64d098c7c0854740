"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed even
under output capture.  Every comparison is exact; the only tolerance is the
1 s wall-clock limit on each named-graph fact in criterion 1.
"""

import importlib
import json
import random
import time
from itertools import combinations, combinations_with_replacement

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

import oracles
from oddhole.canon import is_petersen
from oddhole.cli import main
from oddhole.coloring import chromatic_number, is_proper
from oddhole.cycles import enumerate_chordless_cycles, family_ell, girth, is_member
from oddhole.generate import enumerate_connected, enumerate_girth5
from oddhole.graph import Graph, cycle_graph
from oddhole.harness import run_battery
from oddhole.io import encode_graph6
from oddhole.layers import LayerOutcome, check_layer_theorem, connected_sources, layered_four_coloring
from oddhole.named import p_minus, petersen, theta, theta_minus, theta_plus
from oddhole.structure import (
    all_cutsets_stable,
    find_induced_pattern,
    find_unstable_cutset_on_5cycle,
    five_cycles_sharing_edge,
    five_holes,
    is_k_connected,
)
from oddhole.verify import replay

verify_mod = importlib.import_module("oddhole.verify")

FACT_TIME_LIMIT_S = 1.0
# graphs on n unlabelled vertices, n = 1..8 (OEIS A000088)
ALL_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
# connected girth >= 5 graphs, n = 1..8
GIRTH5_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 4, 6: 8, 7: 18, 8: 47}


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {title} [{detail}]")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def members():
    graphs = list(enumerate_girth5(11))
    return graphs, [g for g in graphs if family_ell(g) == 2]


@pytest.fixture(scope="module")
def three_connected_members(members):
    return [g for g in members[1] if is_k_connected(g, 3)]


def corpus():
    return [petersen(), theta_plus(), theta(), theta_minus(), p_minus()] + [cycle_graph(k) for k in (5, 7, 9)]


# -- oracle helpers ------------------------------------------------------------


def _oracle_member_g2(g):
    holes = oracles.chordless_cycle_sets(g.n, g.edges(), 7)
    return oracles.girth(g.n, g.edges()) == 5 and not any(len(h) % 2 for h in holes)


def _oracle_cutsets_stable(g, size=3):
    adj = oracles.adjacency(g.n, g.edges())
    for cut in combinations(range(g.n), size):
        rest = set(range(g.n)) - set(cut)
        if rest and not oracles.connected(rest, adj):
            if any(b in adj[a] for a, b in combinations(cut, 2)):
                return False
    return True


def _oracle_induces(g, h):
    return GraphMatcher(oracles.to_nx(g), oracles.to_nx(h)).subgraph_is_isomorphic()


def _oracle_sharing_pair(g):
    fives = [h for h in oracles.chordless_cycle_sets(g.n, g.edges(), 5) if len(h) == 5]
    for a, b in combinations(fives, 2):
        if any(g.has_edge(x, y) for x, y in combinations(a & b, 2)):
            return True
    return False


# -- 1 -----------------------------------------------------------------------------


def test_criterion_1_named_graph_facts(report):
    facts = []  # (label, package value, oracle value, pinned, seconds)

    def fact(label, pkg, oracle, pinned):
        t0 = time.perf_counter()
        value = pkg()
        dt = time.perf_counter() - t0
        facts.append((label, value, oracle(), pinned, dt))

    P = petersen()
    fact("petersen girth", lambda: girth(P), lambda: oracles.girth(P.n, P.edges()), 5)
    fact("petersen chi", lambda: chromatic_number(P)[0], lambda: oracles.chromatic_number(P.n, P.edges()), 3)
    fact("petersen 3-connected", lambda: is_k_connected(P, 3), lambda: oracles.is_k_connected(P.n, P.edges(), 3), True)
    fact("petersen in G2", lambda: is_member(P, 2).member, lambda: _oracle_member_g2(P), True)
    fact("petersen 3-cutsets stable", lambda: all_cutsets_stable(P) is None, lambda: _oracle_cutsets_stable(P), True)
    for name, pat in (("theta+", theta_plus()), ("theta-", theta_minus()), ("p-", p_minus())):
        fact(f"petersen induces {name}", lambda pat=pat: find_induced_pattern(P, pat) is not None,
             lambda pat=pat: _oracle_induces(P, pat), True)
    for name, g in (("theta+", theta_plus()), ("theta", theta()), ("theta-", theta_minus())):
        fact(f"{name} in G2", lambda g=g: is_member(g, 2).member, lambda g=g: _oracle_member_g2(g), True)
        fact(f"{name} chi", lambda g=g: chromatic_number(g)[0], lambda g=g: oracles.chromatic_number(g.n, g.edges()), 3)
    T = theta_plus()
    fact("theta+ sharing 5-cycle pair", lambda: five_cycles_sharing_edge(T) is not None,
         lambda: _oracle_sharing_pair(T), True)

    bad = [f for f in facts if not (f[1] == f[2] == f[3] and f[4] < FACT_TIME_LIMIT_S)]
    slowest = max(f[4] for f in facts)
    detail = f"{len(facts)} facts, oracle == package == pinned, slowest {slowest:.3f}s < {FACT_TIME_LIMIT_S}s"
    if bad:
        detail = "mismatch: " + "; ".join(f"{f[0]} pkg={f[1]} oracle={f[2]} pinned={f[3]} t={f[4]:.3f}" for f in bad)
    report(1, "named-graph facts", not bad, detail)


# -- 2 -----------------------------------------------------------------------------


def test_criterion_2_layer_theorem_suite(members, report):
    graphs = [g for g in corpus() if family_ell(g) is not None] + members[1]
    checks = colourings = 0
    failures = []
    for g in graphs:
        ell = family_ell(g)
        mv = is_member(g, ell)
        for s in connected_sources(g, 3):
            checks += 1
            if check_layer_theorem(g, s, ell, mv).outcome == LayerOutcome.THEOREM_VIOLATED:
                failures.append((encode_graph6(g), s))
        for u in range(g.n):
            col = layered_four_coloring(g, u, ell)
            colourings += 1
            if not (is_proper(g, col.colors) and max(col.colors) <= 4):
                failures.append((encode_graph6(g), u))
    detail = (f"{len(graphs)} graphs, {checks} source sets (all connected sizes 1-3), "
              f"{colourings} layered colourings, {len(failures)} failures")
    report(2, "bipartite layers and layered 4-colouring", not failures, detail)


# -- 3 -----------------------------------------------------------------------------


def test_criterion_3_no_sharing_pair_three_colourable(members, report):
    hyp = [g for g in members[1] if five_cycles_sharing_edge(g) is None]
    bad = [g for g in hyp if chromatic_number(g)[0] > 3]
    report(3, "no two 5-cycles share an edge => chi <= 3", not bad and len(hyp) > 0,
           f"{len(hyp)} of {len(members[1])} G2 members meet the hypothesis, {len(bad)} with chi > 3")


# -- 4 -----------------------------------------------------------------------------


def test_criterion_4_stable_cutsets_and_sharing_pairs(three_connected_members, report):
    with_hole = [g for g in three_connected_members if five_holes(g)]
    part_a = [g for g in with_hole if all_cutsets_stable(g) is None]
    fail_a = [g for g in part_a if five_cycles_sharing_edge(g) is None]
    part_b = [g for g in with_hole if five_cycles_sharing_edge(g) is None]
    fail_b = [
        g for g in part_b
        if any(find_unstable_cutset_on_5cycle(g, h) is None for h in five_holes(g))
    ]
    ok = not fail_a and not fail_b
    detail = (f"3-connected G2 members with a 5-hole: {len(with_hole)}; "
              f"stable-cutset branch met by {len(part_a)} (vacuous: {len(part_a) == 0}), failures {len(fail_a)}; "
              f"no-sharing-pair branch met by {len(part_b)} (vacuous: {len(part_b) == 0}), failures {len(fail_b)}")
    report(4, "stable 3-cutsets => sharing pair; no pair => unstable cutset on each 5-hole", ok, detail)


# -- 5 -----------------------------------------------------------------------------


def test_criterion_5_theta_plus_free_or_petersen(three_connected_members, report):
    hyp = [g for g in three_connected_members if all_cutsets_stable(g) is None]
    bad = [g for g in hyp if find_induced_pattern(g, "theta+") is not None and not is_petersen(g)]
    petersens = sum(is_petersen(g) for g in hyp)
    report(5, "3-connected, stable 3-cutsets => theta+-free or Petersen", not bad,
           f"hypothesis met by {len(hyp)} graphs ({petersens} Petersen, vacuous otherwise), {len(bad)} failures")


# -- 6 -----------------------------------------------------------------------------


def test_criterion_6_no_four_chromatic_member(members, tmp_path, monkeypatch, capsys, report):
    chis = [chromatic_number(g)[0] for g in members[1]]
    hits = sum(c == 4 for c in chis)
    code = main(["--json", "search", "--max-n", "11", "--ell", "2", "--statements", "C1_1"])
    rep = json.loads(capsys.readouterr().out.splitlines()[-1])["report"]["totals"]["C1_1"]

    # simulated hit: every 3-colouring attempt fails
    monkeypatch.setattr(verify_mod, "k_colorable", lambda g, k: None)
    src = tmp_path / "theta_plus.g6"
    src.write_bytes(encode_graph6(theta_plus()) + b"\n")
    bundles = tmp_path / "hits.jsonl"
    hit_code = main(["verify", str(src), "--statements", "C1_1", "--violations", str(bundles)])
    capsys.readouterr()
    lines = bundles.read_text().splitlines()
    _, same = replay(lines[0])

    ok = hits == 0 and code == 0 and rep["conjecture_violations"] == 0 and hit_code == 3 and len(lines) == 1 and same
    detail = (f"{len(members[1])} G2 members n <= 11, max chi {max(chis)}, {hits} with chi = 4; "
              f"search exit {code} (met {rep['hypotheses_met']}); simulated hit exit {hit_code}, "
              f"bundle replays identically: {same}")
    report(6, "no 4-chromatic G2 member up to 11 vertices", ok, detail)


# -- 7 -----------------------------------------------------------------------------


def _disjoint_union(parts):
    edges, off = [], 0
    for p in parts:
        edges.extend((u + off, v + off) for u, v in p.edges())
        off += p.n
    return Graph.from_edge_list(off, edges)


def all_graphs(max_n):
    """Every graph on 1..max_n vertices up to isomorphism, as multisets of connected classes."""
    by_order = {}
    for g in enumerate_connected(max_n):
        by_order.setdefault(g.n, []).append(g)
    items = [(k, i) for k in sorted(by_order) for i in range(len(by_order[k]))]

    def rec(start, remaining, chosen):
        if chosen:
            yield chosen
        for j in range(start, len(items)):
            k, i = items[j]
            if k <= remaining:
                yield from rec(j, remaining - k, chosen + [by_order[k][i]])

    for parts in rec(0, max_n, []):
        yield _disjoint_union(parts)


def random_graphs(n, count, seed):
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(count):
        p = rng.choice((0.2, 0.3, 0.45, 0.6))
        yield Graph.from_edge_list(n, [e for e in pairs if rng.random() < p])


def test_criterion_7_oracle_equivalence(report):
    parts = []

    # chromatic number: every graph on at most 8 vertices
    graphs8 = list(all_graphs(8))
    per_n = {}
    for g in graphs8:
        per_n[g.n] = per_n.get(g.n, 0) + 1
    chi_bad = sum(chromatic_number(g)[0] != oracles.chromatic_number(g.n, g.edges()) for g in graphs8)
    parts.append((per_n == ALL_GRAPH_COUNTS and chi_bad == 0, f"chi: {len(graphs8)} graphs n<=8, {chi_bad} mismatches"))

    # chordless cycles: exhaustive connected n<=8, triangle-free and girth>=5 n=9, random n=9
    connected8 = list(enumerate_connected(8))
    tf9 = [g for g in enumerate_connected(9, min_girth=4) if g.n == 9]
    sample9 = list(random_graphs(9, 600, seed=9))
    cyc_set = connected8 + tf9 + sample9
    cyc_bad = sum(
        {frozenset(h.vertices) for h in enumerate_chordless_cycles(g, 4)} != oracles.chordless_cycle_sets(g.n, g.edges())
        for g in cyc_set
    )
    parts.append((cyc_bad == 0, f"holes: {len(cyc_set)} graphs ({len(connected8)} connected n<=8, "
                                f"{len(tf9)} triangle-free n=9, {len(sample9)} random n=9), {cyc_bad} mismatches"))

    # k-connectivity, k = 1..3
    g5_10 = list(enumerate_girth5(10))
    sample10 = list(random_graphs(10, 400, seed=10))
    conn_set = connected8 + tf9 + g5_10 + sample10
    conn_bad = sum(
        is_k_connected(g, k) != oracles.is_k_connected(g.n, g.edges(), k) for g in conn_set for k in (1, 2, 3)
    )
    parts.append((conn_bad == 0, f"k-connected: {len(conn_set)} graphs x k=1..3 ({len(g5_10)} girth>=5 n<=10, "
                                 f"{len(sample10)} random n=10), {conn_bad} mismatches"))

    # girth >= 5 enumeration counts
    counts = {}
    for g in enumerate_girth5(8):
        counts[g.n] = counts.get(g.n, 0) + 1
    naive = oracles.count_classes_naive_girth5(8)
    parts.append((counts == naive == GIRTH5_COUNTS,
                  f"girth>=5 counts n<=8 {list(counts.values())} == naive"))

    ok = all(p[0] for p in parts)
    report(7, "oracle equivalence", ok, "; ".join(p[1] for p in parts))


# -- 8 -----------------------------------------------------------------------------


def test_criterion_8_determinism(report):
    graphs = corpus() + list(enumerate_girth5(10))
    base = run_battery(graphs, "all", 1).totals_dict()
    four = run_battery(graphs, "all", 4).totals_dict()
    shuffled = graphs[:]
    random.Random(8).shuffle(shuffled)
    shuf = run_battery(shuffled, "all", 1).totals_dict()
    shuf4 = run_battery(shuffled, "all", 4).totals_dict()
    ok = base == four == shuf == shuf4
    report(8, "run_battery determinism", ok,
           f"{len(graphs)} graphs x {len(base)} statements; totals equal for workers 1/4 and shuffled order: {ok}")
