"""Corpus verification lab: solve graphs in bulk and check every bound.

Corpora are graph6 files, one graph per line. Parse failures skip the line
with a note and never abort a run; the exit-code contract cares only about
bound violations and conjecture counterexamples. Reports keep input order
regardless of worker count.
"""

from __future__ import annotations

import csv
import json
import multiprocessing
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TextIO

from .bounds import (BoundCheck, GraphFacts, bounds_by_name, check_all,
                     satisfies)
from .engine import Player
from .errors import GraphFormatError
from .families import random_graph
from .graph import Graph
from .graph6 import iter_graph6_lines, parse_graph6
from .solver import DEFAULT_SOLVER_CAP, Solver

REPORT_SCHEMA = 1
CSV_COLUMNS = ["id", "n", "m", "delta", "Delta", "diam", "igt", "igtS",
               "cp_gap", "bound", "value_num", "value_den", "strict", "pass"]


@dataclass(frozen=True)
class CorpusEntry:
    gid: str
    graph: Graph | None
    error: str | None = None


def load_graph6_corpus(lines: Iterable[str], source: str = "corpus") -> list[CorpusEntry]:
    """Parse a graph6 stream; parse errors become skippable entries."""
    entries = []
    for lineno, line in iter_graph6_lines(lines):
        gid = f"{source}:{lineno}"
        try:
            entries.append(CorpusEntry(gid=gid, graph=parse_graph6(line)))
        except GraphFormatError as exc:
            entries.append(CorpusEntry(gid=gid, graph=None, error=str(exc)))
    return entries


@dataclass(frozen=True)
class BoundReport:
    """Solved values and bound evaluations for a single graph."""
    gid: str
    n: int
    m: int
    min_degree: int
    max_degree: int
    diameter: float
    igt: int
    igts: int
    checks: tuple[BoundCheck, ...]

    @property
    def cp_gap(self) -> int:
        return self.igts - self.igt

    @property
    def failed(self) -> bool:
        return any(c.applicable and not c.passed for c in self.checks)


def evaluate_graph(gid: str, g: Graph, bound_names: tuple[str, ...] | None = None,
                   cap: int = DEFAULT_SOLVER_CAP) -> BoundReport:
    solver = Solver(g, cap)
    igt = solver.value(0, Player.DOMINATOR)
    igts = solver.value(0, Player.STALLER)
    facts = GraphFacts.of(g)
    checks = check_all(facts, igt, igts, bounds_by_name(bound_names))
    return BoundReport(gid=gid, n=g.n, m=g.m, min_degree=g.min_degree,
                       max_degree=g.max_degree, diameter=g.diameter,
                       igt=igt, igts=igts, checks=checks)


def _verify_worker(args) -> BoundReport:
    gid, graph, names, cap = args
    return evaluate_graph(gid, graph, names, cap)


@dataclass
class VerifyResult:
    reports: list[BoundReport]
    skipped: list[tuple[str, str]]

    @property
    def failures(self) -> int:
        return sum(1 for report in self.reports if report.failed)

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0


def verify(entries: Iterable[CorpusEntry], bound_names: tuple[str, ...] | None = None,
           jobs: int = 1, cap: int = DEFAULT_SOLVER_CAP) -> VerifyResult:
    """Evaluate every parsed graph against the (filtered) bound set.

    Work is sharded across ``jobs`` processes; reports come back in input
    order either way.
    """
    bounds_by_name(bound_names)  # fail fast on unknown names
    skipped: list[tuple[str, str]] = []
    work: list[tuple[str, Graph, tuple[str, ...] | None, int]] = []
    for entry in entries:
        if entry.graph is None:
            skipped.append((entry.gid, entry.error or "parse error"))
            continue
        g = entry.graph
        if g.n > cap:
            skipped.append((entry.gid, f"n={g.n} over solver cap {cap}"))
            continue
        if g.n < 2 or g.min_degree == 0:
            skipped.append((entry.gid, "not solvable (too small or has isolates)"))
            continue
        work.append((entry.gid, g, bound_names, cap))
    if jobs > 1 and len(work) > 1:
        with multiprocessing.Pool(jobs) as pool:
            reports = list(pool.imap(_verify_worker, work, chunksize=64))
    else:
        reports = [_verify_worker(item) for item in work]
    return VerifyResult(reports=reports, skipped=skipped)


@dataclass
class ConjectureScan:
    """Search for graphs beating two thirds of their order in the D-game."""
    counterexamples: list[tuple[str, int, int]]  # (gid, n, igt)
    checked: int
    skipped: list[tuple[str, str]]

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexamples else 0


def scan_conjecture(entries: Iterable[CorpusEntry],
                    cap: int = DEFAULT_SOLVER_CAP) -> ConjectureScan:
    """Flag every graph with igt > 2n/3 among graphs whose components all
    have order at least 3 (others are skipped with a note)."""
    counterexamples = []
    skipped = []
    checked = 0
    for entry in entries:
        if entry.graph is None:
            skipped.append((entry.gid, entry.error or "parse error"))
            continue
        g = entry.graph
        if g.n == 0 or any(comp.bit_count() < 3 for comp in g.components):
            skipped.append((entry.gid, "has a component of order < 3"))
            continue
        if g.n > cap:
            skipped.append((entry.gid, f"n={g.n} over solver cap {cap}"))
            continue
        solver = Solver(g, cap)
        igt = solver.value(0, Player.DOMINATOR)
        checked += 1
        if 3 * igt > 2 * g.n:
            counterexamples.append((entry.gid, g.n, igt))
    return ConjectureScan(counterexamples=counterexamples, checked=checked,
                          skipped=skipped)


@dataclass
class GapScan:
    histogram: dict[int, int]
    witnesses: list[tuple[str, int]]  # graphs attaining the max |gap|
    skipped: list[tuple[str, str]]

    @property
    def max_abs_gap(self) -> int:
        return max((abs(gap) for gap in self.histogram), default=0)

    @property
    def total(self) -> int:
        return sum(self.histogram.values())


def cp_scan(entries: Iterable[CorpusEntry], cap: int = DEFAULT_SOLVER_CAP) -> GapScan:
    """Histogram of Staller-start minus Dominator-start values."""
    histogram: dict[int, int] = {}
    per_graph: list[tuple[str, int]] = []
    skipped = []
    for entry in entries:
        if entry.graph is None:
            skipped.append((entry.gid, entry.error or "parse error"))
            continue
        g = entry.graph
        if g.n > cap or g.n < 2 or g.min_degree == 0:
            skipped.append((entry.gid, "not solvable (size cap or isolates)"))
            continue
        solver = Solver(g, cap)
        gap = (solver.value(0, Player.STALLER)
               - solver.value(0, Player.DOMINATOR))
        histogram[gap] = histogram.get(gap, 0) + 1
        per_graph.append((entry.gid, gap))
    peak = max((abs(gap) for _, gap in per_graph), default=0)
    witnesses = [(gid, gap) for gid, gap in per_graph if abs(gap) == peak]
    return GapScan(histogram=histogram, witnesses=witnesses, skipped=skipped)


@dataclass
class Diameter2Summary:
    trials: int
    diameter2_count: int
    connected_count: int
    checked: int
    violations: list[str]

    @property
    def fraction_diameter2(self) -> float:
        return self.diameter2_count / self.trials if self.trials else 0.0

    @property
    def exit_code(self) -> int:
        return 1 if self.violations else 0


def diam2_sample(n: int, p: float, trials: int, seed: int,
                 cap: int = DEFAULT_SOLVER_CAP) -> Diameter2Summary:
    """Sample G(n, p); solve every connected diameter-<=2 sample and check
    both game values against 2n/3. Reports the diameter-2 fraction."""
    rng = random.Random(seed)
    diameter2 = connected = checked = 0
    violations = []
    for trial in range(trials):
        g = random_graph(n, p, rng)
        if not g.is_connected():
            continue
        connected += 1
        diam = g.diameter
        if diam == 2:
            diameter2 += 1
        if diam <= 2 and 3 <= g.n <= cap:
            solver = Solver(g, cap)
            igt = solver.value(0, Player.DOMINATOR)
            igts = solver.value(0, Player.STALLER)
            checked += 1
            bound = Fraction(2 * g.n, 3)
            if not (satisfies(igt, bound, False) and satisfies(igts, bound, False)):
                violations.append(
                    f"trial {trial}: n={g.n} igt={igt} igtS={igts} exceeds 2n/3")
    return Diameter2Summary(trials=trials, diameter2_count=diameter2,
                            connected_count=connected, checked=checked,
                            violations=violations)


# -- report serialization ----------------------------------------------------

def _diam_field(diameter: float):
    return int(diameter) if diameter != float("inf") else None


def report_to_dict(report: BoundReport) -> dict:
    return {
        "id": report.gid,
        "n": report.n,
        "m": report.m,
        "delta": report.min_degree,
        "Delta": report.max_degree,
        "diam": _diam_field(report.diameter),
        "igt": report.igt,
        "igtS": report.igts,
        "cp_gap": report.cp_gap,
        "bounds": [
            {
                "name": check.name,
                "target": check.target,
                "applicable": check.applicable,
                "value": None if check.value is None else
                         {"num": check.value.numerator, "den": check.value.denominator},
                "strict": check.strict,
                "pass": check.passed,
                "slack": None if check.slack is None else
                         {"num": check.slack.numerator, "den": check.slack.denominator},
            }
            for check in report.checks
        ],
    }


def write_json_report(result: VerifyResult, stream: TextIO) -> None:
    payload = {
        "schema": REPORT_SCHEMA,
        "reports": [report_to_dict(report) for report in result.reports],
        "skipped": [{"id": gid, "reason": reason} for gid, reason in result.skipped],
        "summary": {"graphs": len(result.reports), "failures": result.failures},
    }
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def write_csv_report(result: VerifyResult, stream: TextIO) -> None:
    """One row per applicable bound check, fixed column set."""
    writer = csv.writer(stream)
    writer.writerow(CSV_COLUMNS)
    for report in result.reports:
        diam = _diam_field(report.diameter)
        for check in report.checks:
            if not check.applicable:
                continue
            writer.writerow([
                report.gid, report.n, report.m, report.min_degree,
                report.max_degree, "inf" if diam is None else diam,
                report.igt, report.igts, report.cp_gap, check.name,
                check.value.numerator, check.value.denominator,
                int(check.strict), int(check.passed),
            ])


def entries_from_graphs(pairs: Iterable[tuple[str, Graph]]) -> list[CorpusEntry]:
    return [CorpusEntry(gid=gid, graph=g) for gid, g in pairs]
