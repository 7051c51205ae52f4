#!/usr/bin/env python3
"""Enumerate all connected graphs on 3..8 vertices as a graph6 corpus.

Produces tests/data/connected_3_8.g6 with one graph per line, grouped by
order, sorted by (edge count, graph6 string) within each order.

Orders 3..7 come straight from the networkx graph atlas. Order 8 is built
by attaching a new vertex (every nonempty neighborhood) to every 7-vertex
atlas graph and deduplicating up to isomorphism: candidates are bucketed
by a cheap invariant and compared exactly with VF2. The resulting counts
must match the published numbers of connected graphs per order, or this
script aborts.

This tool is development-only: the package consumes the corpus file and
never enumerates graphs itself. Encoding goes through networkx so the
corpus is produced independently of the package's own graph6 code.
"""

import sys
import time
from collections import defaultdict
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

EXPECTED_CONNECTED = {3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
OUT_PATH = Path(__file__).resolve().parent.parent / "tests" / "data" / "connected_3_8.g6"


def graph_key(g: nx.Graph) -> tuple:
    """Cheap isomorphism-invariant bucket key."""
    degrees = sorted(d for _, d in g.degree())
    profile = tuple(sorted(
        tuple(sorted(g.degree(w) for w in g.neighbors(v))) for v in g))
    triangles = tuple(sorted(nx.triangles(g).values()))
    return (g.number_of_edges(), tuple(degrees), profile, triangles)


def g6_line(g: nx.Graph) -> str:
    relabeled = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(relabeled, header=False).decode("ascii").strip()


def atlas_by_order() -> dict[int, list[nx.Graph]]:
    by_order: dict[int, list[nx.Graph]] = defaultdict(list)
    for g in graph_atlas_g():
        by_order[g.number_of_nodes()].append(g)
    return by_order


def connected_order8(bases: list[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    found: list[nx.Graph] = []
    candidates = 0
    start = time.time()
    for base_index, base in enumerate(bases):
        base = nx.convert_node_labels_to_integers(base)
        for neighborhood in range(1, 1 << 7):
            g = base.copy()
            g.add_node(7)
            for v in range(7):
                if neighborhood >> v & 1:
                    g.add_edge(7, v)
            if not nx.is_connected(g):
                continue
            candidates += 1
            key = graph_key(g)
            bucket = buckets[key]
            if any(nx.is_isomorphic(g, other) for other in bucket):
                continue
            bucket.append(g)
            found.append(g)
        if (base_index + 1) % 100 == 0:
            print(f"  base {base_index + 1}/{len(bases)}: {len(found)} distinct, "
                  f"{candidates} candidates, {time.time() - start:.0f}s",
                  file=sys.stderr)
    return found


def main() -> int:
    by_order = atlas_by_order()
    corpus: dict[int, list[str]] = {}
    for order in range(3, 8):
        lines = sorted(
            (g.number_of_edges(), g6_line(g))
            for g in by_order[order] if nx.is_connected(g))
        corpus[order] = [line for _, line in lines]
    print("augmenting 7-vertex graphs to order 8...", file=sys.stderr)
    order8 = connected_order8(by_order[7])
    corpus[8] = [line for _, line in sorted((g.number_of_edges(), g6_line(g))
                                            for g in order8)]

    for order, lines in corpus.items():
        if len(lines) != EXPECTED_CONNECTED[order]:
            print(f"FATAL: order {order}: got {len(lines)} graphs, expected "
                  f"{EXPECTED_CONNECTED[order]}", file=sys.stderr)
            return 1
        if len(set(lines)) != len(lines):
            print(f"FATAL: duplicate graph6 lines at order {order}", file=sys.stderr)
            return 1
        print(f"order {order}: {len(lines)} connected graphs", file=sys.stderr)

    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT_PATH, "w", encoding="ascii") as handle:
        for order in range(3, 9):
            for line in corpus[order]:
                handle.write(line + "\n")
    total = sum(len(lines) for lines in corpus.values())
    print(f"wrote {total} graphs to {OUT_PATH}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
