"""Command-line laboratory for the total isolation game.

Exit codes: 0 all checks passed, 1 a bound failed or a conjecture
counterexample surfaced, 2 usage or I/O error. The solver cap can be
raised with the ISOGAME_SOLVER_CAP environment variable.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bounds import bound_names
from .engine import Player
from .errors import IsogameError
from .families import from_shorthand, random_connected
from .graph import Graph
from .graph6 import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .lab import (cp_scan, diam2_sample, load_graph6_corpus, scan_conjecture,
                  verify, write_csv_report, write_json_report)
from .solver import Solver, solver_cap_from_env
from .strategies import (BestResponseStrategy, ExtremalStaller,
                         GreedyDominator, ModifiedGreedyDominator,
                         OptimalStrategy, RandomStrategy, simulate)

STRATEGY_NAMES = ("greedy", "modified-greedy", "optimal", "random",
                  "extremal", "best-response")
USAGE_ERROR = 2


def _load_graph(args) -> Graph:
    sources = [bool(args.family), args.g6 is not None, args.edge_list is not None]
    if sum(sources) != 1:
        raise IsogameError(
            "give exactly one graph input: a family shorthand (e.g. P5, "
            "P3+C6), --g6 <string|->, or --edge-list <file>")
    if args.family:
        return from_shorthand(args.family)
    if args.g6 is not None:
        text = sys.stdin.readline() if args.g6 == "-" else args.g6
        return parse_graph6(text.strip())
    with open(args.edge_list, encoding="ascii") as handle:
        return parse_edge_list(handle.read())


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("family", nargs="?", default=None,
                        help="family shorthand like P5, C6, K4, P3+C6")
    parser.add_argument("--g6", metavar="STRING",
                        help="graph6 string, or - to read one line from stdin")
    parser.add_argument("--edge-list", metavar="FILE",
                        help="edge-list file: n, then one 'u v' pair per line")


def _corpus_entries(path: str):
    if path == "-":
        return load_graph6_corpus(sys.stdin, source="stdin")
    with open(path, encoding="ascii") as handle:
        return load_graph6_corpus(handle, source=path)


def _build_strategy(name: str, role: Player, seed: int, cap: int,
                    opponent_name: str | None):
    if name == "greedy":
        return GreedyDominator()
    if name == "modified-greedy":
        return ModifiedGreedyDominator()
    if name == "optimal":
        return OptimalStrategy(cap)
    if name == "random":
        return RandomStrategy(seed)
    if name == "extremal":
        if role is not Player.STALLER:
            raise IsogameError("the extremal strategy plays Staller only")
        return ExtremalStaller(cap)
    if name == "best-response":
        if opponent_name in (None, "best-response"):
            raise IsogameError(
                "best-response needs a concrete opponent strategy on the "
                "other side (use `solve` for optimal-vs-optimal)")
        opponent = _build_strategy(opponent_name, role.other, seed, cap, None)
        return BestResponseStrategy(opponent, role, cap)
    raise IsogameError(
        f"unknown strategy {name!r}; valid: {', '.join(STRATEGY_NAMES)}")


def _pv_text(g: Graph, variation: Sequence[int]) -> str:
    return "[" + ",".join(g.label(v) for v in variation) + "]"


def _cmd_solve(args) -> int:
    g = _load_graph(args)
    cap = solver_cap_from_env()
    first = Player.STALLER if args.staller_start else Player.DOMINATOR
    value = Solver(g, cap).game_value(first)
    label = "igtS" if args.staller_start else "igt"
    print(f"{label}={value.total_moves} pv={_pv_text(g, value.principal_variation)}")
    return 0


def _cmd_simulate(args) -> int:
    g = _load_graph(args)
    cap = solver_cap_from_env()
    dominator = _build_strategy(args.dom, Player.DOMINATOR, args.seed, cap,
                                opponent_name=args.staller)
    staller = _build_strategy(args.staller, Player.STALLER, args.seed, cap,
                              opponent_name=args.dom)
    first = Player.STALLER if args.staller_start else Player.DOMINATOR
    trace = simulate(g, dominator, staller, first)
    for i, record in enumerate(trace.moves, start=1):
        note = f"  [{record.note}]" if record.note else ""
        print(f"{i}. {record.mover} plays {g.label(record.vertex)} "
              f"(marks {record.new_marks}, stage {record.stage}){note}")
    print(f"t={trace.t}")
    return 0


def _cmd_verify(args) -> int:
    entries = _corpus_entries(args.corpus)
    names = tuple(args.bounds) if args.bounds else None
    result = verify(entries, bound_names=names, jobs=args.jobs,
                    cap=solver_cap_from_env())
    for report in result.reports:
        bad = [c.name for c in report.checks if c.applicable and not c.passed]
        status = "FAIL " + ",".join(bad) if bad else "ok"
        print(f"{report.gid} n={report.n} igt={report.igt} igtS={report.igts} {status}")
    for gid, reason in result.skipped:
        print(f"warning: skipped {gid}: {reason}", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as handle:
            if args.out.endswith(".csv"):
                write_csv_report(result, handle)
            else:
                write_json_report(result, handle)
    print(f"verified {len(result.reports)} graphs, "
          f"{result.failures} failures, {len(result.skipped)} skipped")
    return result.exit_code


def _cmd_scan_conjecture(args) -> int:
    entries = _corpus_entries(args.corpus)
    scan = scan_conjecture(entries, cap=solver_cap_from_env())
    for gid, reason in scan.skipped:
        print(f"note: skipped {gid}: {reason}", file=sys.stderr)
    if scan.counterexamples:
        print("!" * 72)
        print("COUNTEREXAMPLE(S) TO THE 2/3 BOUND FOUND - this is a new result,")
        print("double-check the graphs below by hand before celebrating:")
        for gid, n, igt in scan.counterexamples:
            print(f"  {gid}: n={n} igt={igt} > 2n/3")
        print("!" * 72)
    else:
        print(f"scanned {scan.checked} graphs: no counterexample "
              f"(igt <= 2n/3 throughout)")
    return scan.exit_code


def _cmd_cp_scan(args) -> int:
    entries = _corpus_entries(args.corpus)
    scan = cp_scan(entries, cap=solver_cap_from_env())
    for gid, reason in scan.skipped:
        print(f"note: skipped {gid}: {reason}", file=sys.stderr)
    for gap in sorted(scan.histogram):
        print(f"gap {gap:+d}: {scan.histogram[gap]} graphs")
    print(f"max |igtS - igt| = {scan.max_abs_gap}; witnesses: "
          + ", ".join(gid for gid, _ in scan.witnesses[:10]))
    return 0


def _cmd_diam2(args) -> int:
    summary = diam2_sample(args.n, args.p, args.trials, args.seed,
                           cap=solver_cap_from_env())
    print(f"trials={summary.trials} connected={summary.connected_count} "
          f"diameter2={summary.diameter2_count} "
          f"fraction={summary.fraction_diameter2:.3f} checked={summary.checked}")
    for line in summary.violations:
        print(f"VIOLATION: {line}")
    return summary.exit_code


def _cmd_gen(args) -> int:
    if args.family == "random":
        g = random_connected(args.n, args.p, args.min_degree, args.seed)
    else:
        g = from_shorthand(args.family)
    if args.graph6:
        print(emit_graph6(g))
    else:
        sys.stdout.write(emit_edge_list(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isogame",
        description="exact solver and verification lab for the total "
                    "isolation game on graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="exact game value and principal variation")
    _add_graph_arguments(p_solve)
    p_solve.add_argument("--staller-start", action="store_true",
                         help="solve the Staller-start game instead")
    p_solve.set_defaults(handler=_cmd_solve)

    p_sim = sub.add_parser("simulate", help="play two strategies against each other")
    _add_graph_arguments(p_sim)
    p_sim.add_argument("--dom", required=True, metavar="STRATEGY",
                       help=f"Dominator strategy: {', '.join(STRATEGY_NAMES)}")
    p_sim.add_argument("--staller", required=True, metavar="STRATEGY",
                       help="Staller strategy (same names)")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--staller-start", action="store_true")
    p_sim.set_defaults(handler=_cmd_simulate)

    p_verify = sub.add_parser("verify", help="check every bound over a graph6 corpus")
    p_verify.add_argument("corpus", help="graph6 file, one graph per line, or -")
    p_verify.add_argument("--bounds", nargs="+", metavar="NAME",
                          help=f"subset of bounds: {', '.join(bound_names())}")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out", metavar="FILE",
                          help="write a report (.json or .csv by extension)")
    p_verify.set_defaults(handler=_cmd_verify)

    p_scan = sub.add_parser("scan-conjecture",
                            help="search a corpus for igt > 2n/3")
    p_scan.add_argument("corpus")
    p_scan.set_defaults(handler=_cmd_scan_conjecture)

    p_cp = sub.add_parser("cp-scan", help="histogram of igtS - igt over a corpus")
    p_cp.add_argument("corpus")
    p_cp.set_defaults(handler=_cmd_cp_scan)

    p_diam2 = sub.add_parser("diam2",
                             help="random-graph sampling of the diameter-2 bound")
    p_diam2.add_argument("--n", type=int, required=True)
    p_diam2.add_argument("--p", type=float, required=True)
    p_diam2.add_argument("--trials", type=int, required=True)
    p_diam2.add_argument("--seed", type=int, default=0)
    p_diam2.set_defaults(handler=_cmd_diam2)

    p_gen = sub.add_parser("gen", help="emit a graph from a family")
    p_gen.add_argument("family",
                       help="shorthand like P5 or P3+C6, or 'random'")
    p_gen.add_argument("--graph6", action="store_true",
                       help="emit graph6 instead of an edge list")
    p_gen.add_argument("--n", type=int, default=10, help="random: vertex count")
    p_gen.add_argument("--p", type=float, default=0.5, help="random: edge probability")
    p_gen.add_argument("--min-degree", type=int, default=1)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(handler=_cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return USAGE_ERROR if exc.code not in (0,) else 0
    try:
        return args.handler(args)
    except IsogameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
