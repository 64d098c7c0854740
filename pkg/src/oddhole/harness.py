"""Batch verification over a stream of graphs."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .graph import Graph
from .io import decode_graph6, encode_graph6
from .verify import (
    CONFIRMED,
    CONFIRMED_BY_EXCEPTION,
    CONJECTURE_VIOLATION,
    MET,
    NOT_MET,
    TIMED_OUT,
    VIOLATION,
    TheoremVerdict,
    budget_from_env,
    parse_statements,
    verify_all,
)

log = logging.getLogger(__name__)

COUNTERS = (
    "graphs",
    "hypotheses_met",
    "hypotheses_not_met",
    "confirmed",
    "confirmed_by_exception",
    "violations",
    "conjecture_violations",
    "timeouts",
)


class BatteryInputError(OSError):
    """An input or output failure tied to the graph index where it happened."""

    def __init__(self, index: int, cause: BaseException):
        super().__init__(f"graph #{index}: {cause}")
        self.index = index
        self.cause = cause


@dataclass
class RunReport:
    totals: dict[str, Counter] = field(default_factory=dict)
    config: dict = field(default_factory=dict)
    graphs: int = 0
    verdicts: list[tuple[int, list[TheoremVerdict]]] | None = None

    def add(self, verdicts: list[TheoremVerdict]) -> None:
        self.graphs += 1
        for v in verdicts:
            c = self.totals.setdefault(v.statement_id, Counter({k: 0 for k in COUNTERS}))
            c["graphs"] += 1
            if v.applicability == MET:
                c["hypotheses_met"] += 1
                if v.outcome == CONFIRMED:
                    c["confirmed"] += 1
                elif v.outcome == CONFIRMED_BY_EXCEPTION:
                    c["confirmed_by_exception"] += 1
                elif v.outcome == VIOLATION:
                    c["violations"] += 1
                elif v.outcome == CONJECTURE_VIOLATION:
                    c["conjecture_violations"] += 1
            elif v.applicability == NOT_MET:
                c["hypotheses_not_met"] += 1
            elif v.applicability == TIMED_OUT:
                c["timeouts"] += 1

    def total(self, key: str) -> int:
        return sum(c[key] for c in self.totals.values())

    @property
    def theorem_violations(self) -> int:
        return self.total("violations")

    @property
    def conjecture_violations(self) -> int:
        return self.total("conjecture_violations")

    def totals_dict(self) -> dict[str, dict[str, int]]:
        return {sid: {k: c[k] for k in COUNTERS} for sid, c in sorted(self.totals.items())}

    def to_dict(self) -> dict:
        return {"graphs": self.graphs, "config": dict(self.config), "totals": self.totals_dict()}

    def format_text(self) -> str:
        lines = [f"graphs: {self.graphs}"]
        if self.config:
            lines.append("config: " + ", ".join(f"{k}={v}" for k, v in sorted(self.config.items())))
        head = f"{'statement':<12} {'met':>6} {'not_met':>8} {'ok':>6} {'exc':>5} {'viol':>5} {'conj':>5} {'tmo':>5}"
        lines.append(head)
        for sid, c in self.totals.items():
            lines.append(
                f"{sid:<12} {c['hypotheses_met']:>6} {c['hypotheses_not_met']:>8} {c['confirmed']:>6} "
                f"{c['confirmed_by_exception']:>5} {c['violations']:>5} "
                f"{c['conjecture_violations']:>5} {c['timeouts']:>5}"
            )
        return "\n".join(lines)


def _work(payload: tuple[bytes, tuple[str, ...], int | None]) -> list[TheoremVerdict]:
    raw, statements, budget_ms = payload
    return verify_all(decode_graph6(raw), statements, budget_ms=budget_ms)


def _payloads(graphs: Iterable[Graph], statements, budget_ms) -> Iterator[tuple[int, Graph, tuple]]:
    it = iter(graphs)
    index = 0
    while True:
        try:
            g = next(it)
        except StopIteration:
            return
        except (OSError, ValueError) as exc:
            raise BatteryInputError(index, exc) from exc
        yield index, g, (encode_graph6(g), statements, budget_ms)
        index += 1


def run_battery(
    graphs: Iterable[Graph],
    statements: Iterable[str] | str | None = None,
    workers: int = 1,
    *,
    budget_ms: int | None = None,
    violations_out: IO[str] | None = None,
    verbose: bool = False,
    config: dict | None = None,
) -> RunReport:
    """Verify every graph and aggregate totals per statement.

    Results are consumed in input order, so the report and the violations
    stream do not depend on the worker count.  Each violation (theorem or
    conjecture) is written to ``violations_out`` as soon as its graph is done.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    sids = parse_statements(statements)
    if budget_ms is None:
        budget_ms = budget_from_env()
    report = RunReport(config=dict(config or {}))
    report.config.setdefault("workers", workers)
    report.config.setdefault("statements", ",".join(sids))
    report.config.setdefault("budget_ms", budget_ms)
    if verbose:
        report.verdicts = []
    for sid in sids:
        report.totals[sid] = Counter({k: 0 for k in COUNTERS})

    def consume(index: int, g: Graph, verdicts: list[TheoremVerdict]) -> None:
        report.add(verdicts)
        if verbose:
            report.verdicts.append((index, verdicts))
        if violations_out is None:
            return
        for v in verdicts:
            if v.outcome in (VIOLATION, CONJECTURE_VIOLATION):
                try:
                    violations_out.write(v.to_json(g) + "\n")
                    violations_out.flush()
                except OSError as exc:
                    raise BatteryInputError(index, exc) from exc

    stream = _payloads(graphs, sids, budget_ms)
    if workers == 1:
        for index, g, payload in stream:
            consume(index, g, _work(payload))
        return report

    pending: dict[int, Graph] = {}

    def feed() -> Iterator[tuple]:
        for index, g, payload in stream:
            pending[index] = g
            yield payload

    with ProcessPoolExecutor(max_workers=workers) as pool:
        for index, verdicts in enumerate(pool.map(_work, feed(), chunksize=8)):
            consume(index, pending.pop(index), verdicts)
    return report
