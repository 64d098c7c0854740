"""Statement-level checkers.

Each statement id maps to a predicate over one graph.  Hypotheses are checked
first; the conclusion is only evaluated when they hold.  Verdicts carry
witnesses as plain vertex lists so a violation can be serialised with the
graph's graph6 encoding and replayed.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from .canon import is_petersen
from .coloring import chromatic_number, is_in_g0, is_proper, k_colorable
from .cycles import enumerate_chordless_cycles, family_ell, is_member
from .errors import BudgetExceeded, UnknownStatement
from .graph import Graph, bits, popcount
from .io import decode_graph6, encode_graph6
from .layers import (
    LayerOutcome,
    check_layer_theorem,
    connected_sources,
    edge_deletion_closure,
    layered_four_coloring,
    two_color,
)
from .structure import (
    find_induced_pattern,
    find_strong_ear,
    find_unstable_cutset_on_5cycle,
    five_cycles_sharing_edge,
    enumerate_cutsets,
    is_cutset,
    is_k_connected,
)

STATEMENTS = (
    "T1_2_layers",
    "T1_2_edge",
    "T1_2_chi4",
    "T1_4",
    "T1_5",
    "T1_6_L4_1",
    "T1_7",
    "P5_1",
    "P5_2",
    "C1_1",
    "C1_6",
    "C6_1",
)
CONJECTURES = frozenset({"C1_1", "C1_6", "C6_1"})

MET = "met"
NOT_MET = "not_met"
TIMED_OUT = "timed_out"

CONFIRMED = "confirmed"
CONFIRMED_BY_EXCEPTION = "confirmed_by_exception"
VIOLATION = "VIOLATION"
CONJECTURE_VIOLATION = "CONJECTURE_VIOLATION"

DEFAULT_BUDGET_MS = 60000
DEFAULT_CONJECTURE_ELLS = (2, 3)


def budget_from_env() -> int:
    raw = os.environ.get("ODDHOLE_BUDGET_MS")
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET_MS
    value = int(raw)
    if value <= 0:
        raise ValueError(f"ODDHOLE_BUDGET_MS must be positive, got {value}")
    return value


@dataclass(frozen=True)
class TheoremVerdict:
    statement_id: str
    applicability: str
    clause: str | None = None
    outcome: str | None = None
    witness: dict = field(default_factory=dict)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def is_violation(self) -> bool:
        return self.outcome == VIOLATION

    @property
    def is_conjecture_violation(self) -> bool:
        return self.outcome == CONJECTURE_VIOLATION

    def to_record(self, g: Graph) -> dict:
        return {
            "graph6": encode_graph6(g).decode("ascii"),
            "statement": self.statement_id,
            "applicability": self.applicability,
            "clause": self.clause,
            "outcome": self.outcome,
            "witness": self.witness,
        }

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_record(g), sort_keys=True)


def replay(record: str | dict) -> tuple[TheoremVerdict, bool]:
    """Re-run the statement recorded in a bundle; return the fresh verdict and
    whether it reproduces the recorded one exactly."""
    rec = json.loads(record) if isinstance(record, str) else record
    g = decode_graph6(rec["graph6"])
    fresh = verify(g, rec["statement"])
    same = json.loads(fresh.to_json(g)) == json.loads(json.dumps(rec, sort_keys=True))
    return fresh, same


class _Deadline:
    def __init__(self, budget_ms: int | None):
        self.at = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0

    def check(self) -> None:
        if self.at is not None and time.monotonic() > self.at:
            raise BudgetExceeded("per-graph time budget exhausted")


class Facts:
    """Lazily computed properties of one graph shared across statements."""

    def __init__(self, g: Graph, deadline: _Deadline | None = None):
        self.g = g
        self.deadline = deadline or _Deadline(None)

    def tick(self) -> None:
        self.deadline.check()

    @cached_property
    def ell(self) -> int | None:
        return family_ell(self.g)

    @cached_property
    def in_g2(self) -> bool:
        return self.ell == 2

    @cached_property
    def membership(self):
        return is_member(self.g, self.ell) if self.ell is not None else None

    @cached_property
    def three_connected(self) -> bool:
        return is_k_connected(self.g, 3)

    @cached_property
    def unstable_3cutset(self):
        for rep in enumerate_cutsets(self.g, 3):
            self.tick()
            if not rep.stable:
                return rep
        return None

    @cached_property
    def five_holes(self):
        return list(enumerate_chordless_cycles(self.g, 5, 5))

    @cached_property
    def sharing_pair(self):
        return five_cycles_sharing_edge(self.g, self.five_holes)

    @cached_property
    def three_colorable(self) -> bool:
        return k_colorable(self.g, 3) is not None

    @cached_property
    def chromatic(self) -> int:
        return chromatic_number(self.g)[0]

    @cached_property
    def g0(self):
        return is_in_g0(self.g) if self.in_g2 else None

    @cached_property
    def petersen(self) -> bool:
        return is_petersen(self.g)


def _met(sid, outcome=CONFIRMED, **witness) -> TheoremVerdict:
    return TheoremVerdict(sid, MET, None, outcome, witness)


def _not_met(sid, clause: str) -> TheoremVerdict:
    return TheoremVerdict(sid, NOT_MET, clause)


def _fail(sid, **witness) -> TheoremVerdict:
    kind = CONJECTURE_VIOLATION if sid in CONJECTURES else VIOLATION
    return TheoremVerdict(sid, MET, None, kind, witness)


# -- individual statements ----------------------------------------------------------


def _t12_layers(f: Facts, sid: str) -> TheoremVerdict:
    if f.ell is None:
        return _not_met(sid, "G belongs to the family for some ell >= 2")
    checked = 0
    for s in connected_sources(f.g, 3):
        f.tick()
        v = check_layer_theorem(f.g, s, f.ell, f.membership)
        if v.outcome is LayerOutcome.THEOREM_VIOLATED:
            return _fail(sid, source=list(s), layer=v.layer_index, odd_cycle=list(v.odd_cycle))
        if v.outcome is LayerOutcome.CONCLUSION_HOLDS:
            checked += 1
    return _met(sid, ell=f.ell, sources_checked=checked)


def _t12_edge(f: Facts, sid: str) -> TheoremVerdict:
    if f.ell is None:
        return _not_met(sid, "G belongs to the family for some ell >= 2")
    free = 0
    for e in f.g.edges():
        f.tick()
        v = edge_deletion_closure(f.g, e, f.ell, f.membership)
        if v.violated:
            mv = v.membership_after
            hole = list(mv.violation.vertices) if mv.violation else []
            return _fail(sid, edge=list(e), reason=mv.reason, cycle=hole)
        if not v.in_short_cycle:
            free += 1
    return _met(sid, ell=f.ell, edges_off_short_cycles=free)


def _t12_chi4(f: Facts, sid: str) -> TheoremVerdict:
    if f.ell is None:
        return _not_met(sid, "G belongs to the family for some ell >= 2")
    g = f.g
    colors = [0] * g.n
    for comp in g.components():
        sub, back = g.induced(comp)
        side0, side1 = two_color(sub, sub.full)
        if side0 is not None:
            for v in side0:
                colors[back[v]] = 1
            for v in side1:
                colors[back[v]] = 2
            continue
        # a non-bipartite component of a family member is itself a member
        chosen = None
        for root in range(sub.n):
            f.tick()
            col = layered_four_coloring(sub, root)
            if not is_proper(sub, col.colors) or col.palette_size > 4:
                return _fail(sid, root=back[root], coloring=list(col.colors))
            if chosen is None:
                chosen = col
        for v, c in enumerate(chosen.colors):
            colors[back[v]] = c
    if not is_proper(g, colors) or max(colors, default=0) > 4:
        return _fail(sid, coloring=colors)
    return _met(sid, coloring=colors)


def _t14(f: Facts, sid: str) -> TheoremVerdict:
    if not f.in_g2:
        return _not_met(sid, "G is in G_2")
    g0 = f.g0
    if not g0.member:
        return _not_met(sid, f"G is 4-critical: {g0.reason}")
    g = f.g
    covered = set()
    for c in f.five_holes:
        covered.update(c.edges())
    for e in g.edges():
        if e not in covered:
            return _fail(sid, property="every edge on a 5-hole", edge=list(e))
    if g.min_degree() < 4:
        low = min(range(g.n), key=lambda v: (g.degree(v), v))
        return _fail(sid, property="min degree >= 4", vertex=low)
    if not f.three_connected:
        return _fail(sid, property="3-connected")
    from itertools import combinations

    for u in range(g.n):
        for t in combinations(g.neighbors(u), 3):
            f.tick()
            if is_cutset(g, (u, *t)):
                return _fail(sid, property="no vertex plus three neighbours cutset", cutset=[u, *t])
    rep = f.unstable_3cutset
    if rep is not None:
        return _fail(sid, property="every 3-cutset stable", cutset=sorted(rep.cutset))
    return _met(sid)


def _t15(f: Facts, sid: str) -> TheoremVerdict:
    if not f.in_g2:
        return _not_met(sid, "G is in G_2")
    if f.sharing_pair is not None:
        return _not_met(sid, "G induces no two 5-cycles sharing an edge")
    if not f.three_colorable:
        return _fail(sid, chromatic_number=f.chromatic)
    return _met(sid)


def _t16_l41(f: Facts, sid: str) -> TheoremVerdict:
    if not f.in_g2:
        return _not_met(sid, "G is in G_2")
    if not f.five_holes:
        return _not_met(sid, "G has a 5-cycle")
    if not f.three_connected:
        return _not_met(sid, "G is 3-connected")
    f.tick()
    stable = f.unstable_3cutset is None
    pair = f.sharing_pair
    if not stable and pair is not None:
        return _not_met(sid, "every 3-cutset is stable, or no two 5-cycles share an edge")
    if stable and pair is None:
        return _fail(sid, part="sharing 5-cycles", holes=[list(c.vertices) for c in f.five_holes])
    if pair is None:
        cuts = []
        for c in f.five_holes:
            f.tick()
            rep = find_unstable_cutset_on_5cycle(f.g, c)
            if rep is None:
                return _fail(sid, part="5-cycle cutset", hole=list(c.vertices))
            cuts.append(sorted(rep.cutset))
        return _met(sid, branch="5-cycle cutset", cutsets=cuts)
    return _met(sid, branch="sharing 5-cycles", pair=[list(pair[0].vertices), list(pair[1].vertices)])


def _stable_hypotheses(f: Facts, sid: str) -> TheoremVerdict | None:
    if not f.in_g2:
        return _not_met(sid, "G is in G_2")
    if not f.three_connected:
        return _not_met(sid, "G is 3-connected")
    f.tick()
    rep = f.unstable_3cutset
    if rep is not None:
        return _not_met(sid, f"every 3-cutset is stable (unstable: {sorted(rep.cutset)})")
    return None


def _t17(f: Facts, sid: str) -> TheoremVerdict:
    bad = _stable_hypotheses(f, sid)
    if bad is not None:
        return bad
    if f.petersen:
        return _met(sid, CONFIRMED_BY_EXCEPTION, exception="Petersen graph")
    emb = find_induced_pattern(f.g, "theta+")
    if emb is not None:
        return _fail(sid, pattern="theta+", map=list(emb.map))
    return _met(sid)


def _one_neighbour_hosts(f: Facts) -> Iterable[tuple[str, int]]:
    g = f.g
    for c in enumerate_chordless_cycles(g, 5):
        yield "hole", g.mask(c.vertices)
    for b in range(g.n):
        for a in g.neighbors(b):
            for c in g.neighbors(b):
                if a < c and not g.has_edge(a, c):
                    yield "path", (1 << a) | (1 << b) | (1 << c)


def _p51(f: Facts, sid: str) -> TheoremVerdict:
    if not f.in_g2:
        return _not_met(sid, "G is in G_2")
    if not f.three_connected:
        return _not_met(sid, "G is 3-connected")
    g = f.g
    tested = 0
    for kind, h in _one_neighbour_hosts(f):
        f.tick()
        if h == g.full:
            continue
        if any(popcount(g.adj[v] & h) > 1 for v in bits(g.full & ~h)):
            continue
        ear = find_strong_ear(g, bits(h), connected_3=True)
        tested += 1
        if ear is None or ear.length < 3:
            return _fail(sid, host=list(bits(h)), kind=kind)
    if tested == 0:
        return _not_met(sid, "some tested H has at most one neighbour per outside vertex")
    return _met(sid, hosts_checked=tested)


def _p52(f: Facts, sid: str) -> TheoremVerdict:
    bad = _stable_hypotheses(f, sid)
    if bad is not None:
        return bad
    if f.petersen:
        return _met(sid, CONFIRMED_BY_EXCEPTION, exception="Petersen graph")
    emb = find_induced_pattern(f.g, "p-")
    if emb is not None:
        return _fail(sid, pattern="p-", map=list(emb.map))
    return _met(sid)


def _c11(f: Facts, sid: str) -> TheoremVerdict:
    if not f.in_g2:
        return _not_met(sid, "G is in G_2")
    if not f.three_colorable:
        return _fail(sid, chromatic_number=f.chromatic)
    return _met(sid)


def _c16(f: Facts, sid: str) -> TheoremVerdict:
    if not f.in_g2:
        return _not_met(sid, "G is in G_2")
    g0 = f.g0
    if not g0.member:
        return _not_met(sid, f"G is 4-critical: {g0.reason}")
    for name in ("theta", "theta-"):
        emb = find_induced_pattern(f.g, name)
        if emb is not None:
            return _fail(sid, pattern=name, map=list(emb.map))
    return _met(sid)


def _c61(f: Facts, sid: str, ells: tuple[int, ...] = DEFAULT_CONJECTURE_ELLS) -> TheoremVerdict:
    if f.ell is None or f.ell not in ells:
        scope = ", ".join(str(e) for e in ells)
        return _not_met(sid, f"G belongs to the family for ell in {{{scope}}}")
    if not f.three_colorable:
        return _fail(sid, ell=f.ell, chromatic_number=f.chromatic)
    return _met(sid, ell=f.ell)


_CHECKS: dict[str, Callable[[Facts, str], TheoremVerdict]] = {
    "T1_2_layers": _t12_layers,
    "T1_2_edge": _t12_edge,
    "T1_2_chi4": _t12_chi4,
    "T1_4": _t14,
    "T1_5": _t15,
    "T1_6_L4_1": _t16_l41,
    "T1_7": _t17,
    "P5_1": _p51,
    "P5_2": _p52,
    "C1_1": _c11,
    "C1_6": _c16,
    "C6_1": _c61,
}


def parse_statements(selection: str | Iterable[str] | None) -> tuple[str, ...]:
    """``"all"``, ``None``, a comma list or an iterable of ids, in fixed order."""
    if selection is None or selection == "all":
        return STATEMENTS
    items = [s.strip() for s in selection.split(",")] if isinstance(selection, str) else list(selection)
    for s in items:
        if s not in _CHECKS:
            raise UnknownStatement(f"unknown statement id {s!r}")
    wanted = set(items)
    return tuple(s for s in STATEMENTS if s in wanted)


def _run(f: Facts, sid: str) -> TheoremVerdict:
    t0 = time.perf_counter()
    try:
        f.tick()
        v = _CHECKS[sid](f, sid)
    except BudgetExceeded:
        v = TheoremVerdict(sid, TIMED_OUT, "per-graph time budget exhausted")
    elapsed = time.perf_counter() - t0
    return TheoremVerdict(v.statement_id, v.applicability, v.clause, v.outcome, v.witness, elapsed)


def verify(g: Graph, statement_id: str, *, budget_ms: int | None = None) -> TheoremVerdict:
    if statement_id not in _CHECKS:
        raise UnknownStatement(f"unknown statement id {statement_id!r}")
    return _run(Facts(g, _Deadline(budget_ms)), statement_id)


def verify_all(
    g: Graph,
    statements: Iterable[str] | str | None = None,
    *,
    budget_ms: int | None = None,
) -> list[TheoremVerdict]:
    """Every requested statement in fixed order under one shared time budget.

    ``budget_ms`` defaults to ``ODDHOLE_BUDGET_MS`` (60000).  Once the budget
    runs out the remaining statements are reported as timed out.
    """
    sids = parse_statements(statements)
    if budget_ms is None:
        budget_ms = budget_from_env()
    facts = Facts(g, _Deadline(budget_ms))
    return [_run(facts, sid) for sid in sids]


def verdict_summary(v: TheoremVerdict) -> str:
    if v.applicability == MET:
        return f"{v.statement_id}: {v.outcome}"
    if v.applicability == NOT_MET:
        return f"{v.statement_id}: hypotheses not met ({v.clause})"
    return f"{v.statement_id}: timed out"

