"""Command-line interface.

Exit codes: 0 no violation, 1 usage or I/O error, 2 theorem violation,
3 conjecture violation (a theorem violation takes precedence).
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from contextlib import nullcontext
from pathlib import Path

from . import __version__
from .canon import is_petersen
from .coloring import chromatic_number, is_proper
from .cycles import enumerate_chordless_cycles, family_ell, girth
from .errors import OddHoleError
from .generate import DEFAULT_MAX_N_LIMIT, enumerate_girth5
from .graph import Graph
from .harness import BatteryInputError, run_battery
from .io import encode_graph6, format_edge_list, iter_graph6, read_graphs
from .layers import layered_four_coloring
from .named import NAMED, by_name
from .structure import (
    enumerate_cutsets,
    find_induced_pattern,
    five_cycles_sharing_edge,
    vertex_connectivity,
)
from .verify import parse_statements

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_CONJECTURE = 3

PATTERN_CHOICES = ("theta+", "theta", "theta-", "petersen", "p-")


def _girth_out(g: Graph):
    gi = girth(g)
    return None if gi == float("inf") else int(gi)


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _load(args) -> list[Graph]:
    return read_graphs(args.file, args.format)


def cmd_analyze(args) -> int:
    for i, g in enumerate(_load(args)):
        chi, _ = chromatic_number(g)
        ell = family_ell(g)
        pair = five_cycles_sharing_edge(g)
        patterns = {name: find_induced_pattern(g, name) is not None for name in PATTERN_CHOICES}
        rec = {
            "index": i,
            "n": g.n,
            "m": g.edge_count,
            "girth": _girth_out(g),
            "chromatic_number": chi,
            "family_ell": ell,
            "connectivity": vertex_connectivity(g),
            "is_petersen": is_petersen(g),
            "five_cycles_share_edge": pair is not None,
            "induces": patterns,
        }
        flags = " ".join(k for k, v in patterns.items() if v) or "-"
        _emit(
            args,
            rec,
            f"#{i}: n={g.n} m={g.edge_count} girth={rec['girth']} chi={chi} ell={ell} "
            f"kappa={rec['connectivity']} petersen={rec['is_petersen']} "
            f"sharing5={rec['five_cycles_share_edge']} induces={flags}",
        )
    return EXIT_OK


def cmd_color(args) -> int:
    for i, g in enumerate(_load(args)):
        if args.method == "exact":
            chi, col = chromatic_number(g)
            colors = list(col.colors)
        else:
            col = layered_four_coloring(g, args.root)
            colors = list(col.colors)
            chi = None
        rec = {
            "index": i,
            "method": args.method,
            "colors": colors,
            "palette": max(colors, default=0),
            "proper": is_proper(g, colors),
        }
        if chi is not None:
            rec["chromatic_number"] = chi
        _emit(args, rec, f"#{i}: {args.method} palette={rec['palette']} colors={colors}")
    return EXIT_OK


def cmd_holes(args) -> int:
    for i, g in enumerate(_load(args)):
        holes = enumerate_chordless_cycles(g, args.min, args.max, args.parity)
        for h in holes:
            _emit(args, {"index": i, "length": h.length, "cycle": list(h.vertices)},
                  f"#{i}: length {h.length}: {' '.join(map(str, h.vertices))}")
    return EXIT_OK


def cmd_cutsets(args) -> int:
    for i, g in enumerate(_load(args)):
        for rep in enumerate_cutsets(g, args.size):
            rec = {
                "index": i,
                "cutset": sorted(rep.cutset),
                "stable": rep.stable,
                "components": [sorted(c) for c in rep.components],
            }
            _emit(args, rec, f"#{i}: {sorted(rep.cutset)} stable={rep.stable} "
                             f"components={rep.component_count}")
    return EXIT_OK


def cmd_patterns(args) -> int:
    for i, g in enumerate(_load(args)):
        emb = find_induced_pattern(g, args.pattern)
        rec = {"index": i, "pattern": args.pattern, "map": list(emb.map) if emb else None}
        text = f"#{i}: {args.pattern} " + (f"at {list(emb.map)}" if emb else "absent")
        _emit(args, rec, text)
    return EXIT_OK


def _battery(args, graphs, config) -> int:
    out = open(args.violations, "w") if args.violations else nullcontext(None)
    with out as fh:
        report = run_battery(
            graphs,
            args.statements,
            args.workers,
            violations_out=fh if fh is not None else _StdoutViolations(args),
            verbose=args.verbose,
            config=config,
        )
    if args.verbose and not args.json:
        for index, verdicts in report.verdicts:
            for v in verdicts:
                print(f"#{index} {v.statement_id}: {v.applicability} {v.outcome or v.clause or ''}")
    if args.json:
        print(json.dumps({"report": report.to_dict()}, sort_keys=True))
    else:
        print(report.format_text())
    if report.theorem_violations:
        return EXIT_VIOLATION
    if report.conjecture_violations:
        return EXIT_CONJECTURE
    return EXIT_OK


class _StdoutViolations:
    """Violation records go to stdout when no file is given."""

    def __init__(self, args):
        self.args = args

    def write(self, line: str) -> None:
        if self.args.json:
            sys.stdout.write(json.dumps({"violation": json.loads(line)}, sort_keys=True) + "\n")
        else:
            sys.stdout.write("VIOLATION " + line)

    def flush(self) -> None:
        sys.stdout.flush()


def cmd_verify(args) -> int:
    config = {"input": str(args.file), "format": args.format}
    if args.format == "edges":
        return _battery(args, _load(args), config)
    with open(args.file, "rb") as fh:
        # lazy, so a bad record is reported with its graph index
        return _battery(args, iter_graph6(fh), config)


def cmd_search(args) -> int:
    if args.max_n > DEFAULT_MAX_N_LIMIT and not args.allow_large:
        raise argparse.ArgumentTypeError(
            f"--max-n above {DEFAULT_MAX_N_LIMIT} needs --allow-large"
        )
    graphs = enumerate_girth5(args.max_n, allow_large=args.allow_large)
    if args.ell != "all":
        wanted = int(args.ell)
        graphs = (g for g in graphs if family_ell(g) == wanted)
    if args.seed is not None:
        graphs = list(graphs)
        random.Random(args.seed).shuffle(graphs)
    config = {"max_n": args.max_n, "ell": args.ell, "seed": args.seed}
    return _battery(args, graphs, config)


def cmd_gen(args) -> int:
    g = by_name(args.name)
    if args.format == "edges":
        sys.stdout.write(format_edge_list(g))
    else:
        print(encode_graph6(g).decode("ascii"))
    return EXIT_OK


def _statements(value: str) -> str:
    try:
        parse_statements(value)
    except OddHoleError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return value


def _parity(value: str):
    if value not in ("odd", "even", "any"):
        raise argparse.ArgumentTypeError("parity must be odd, even or any")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddhole", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--json", action="store_true", help="one JSON record per line")
    p.add_argument("-v", "--log-level", default="WARNING", help="logging level")
    # lets --json also follow the subcommand without overriding an earlier one
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("file", type=Path)
        sp.add_argument("--format", choices=("graph6", "edges"), default="graph6")
        return sp

    sp = with_file("analyze", "girth, chromatic number, membership, connectivity, patterns")
    sp.set_defaults(func=cmd_analyze)

    sp = with_file("color", "exact or layered colouring")
    sp.add_argument("--method", choices=("exact", "layered"), default="exact")
    sp.add_argument("--root", type=int, default=0)
    sp.set_defaults(func=cmd_color)

    sp = with_file("holes", "list chordless cycles")
    sp.add_argument("--min", type=int, default=4)
    sp.add_argument("--max", type=int, default=None)
    sp.add_argument("--parity", type=_parity, default="any")
    sp.set_defaults(func=cmd_holes)

    sp = with_file("cutsets", "list vertex cutsets of a given size")
    sp.add_argument("--size", type=int, default=3)
    sp.set_defaults(func=cmd_cutsets)

    sp = with_file("patterns", "find an induced named pattern")
    sp.add_argument("--pattern", choices=PATTERN_CHOICES, required=True)
    sp.set_defaults(func=cmd_patterns)

    def battery_opts(sp):
        sp.add_argument("--statements", type=_statements, default="all")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--violations", type=Path, default=None,
                        help="write violation bundles here (default: stdout)")
        sp.add_argument("--verbose", action="store_true", help="print every verdict")

    sp = with_file("verify", "run statement checks on every graph in a file")
    battery_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="enumerate girth>=5 graphs and run the checks", parents=[common])
    sp.add_argument("--max-n", type=int, default=11)
    sp.add_argument("--ell", default="2", help="family parameter to keep, or 'all'")
    sp.add_argument("--seed", type=int, default=None, help="shuffle input order")
    sp.add_argument("--allow-large", action="store_true")
    battery_opts(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("gen", help="print a named graph", parents=[common])
    sp.add_argument("--name", choices=sorted(NAMED), required=True)
    sp.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    if args.command == "search" and args.ell != "all" and not args.ell.isdigit():
        print("error: --ell must be an integer or 'all'", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except BatteryInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, OddHoleError, ValueError, KeyError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
