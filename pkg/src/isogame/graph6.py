"""graph6 and edge-list text formats.

graph6 support is short form only (n <= 62, single size byte, no ``>>graph6``
header); long-form input is rejected so oversized graphs cannot slip past the
solver caps. Edge-list files are ``n`` on the first line followed by ``u v``
pairs with 0-based endpoints; unlisted indices are isolated vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphFormatError
from .graph import Graph

_MAX_SHORT_N = 62


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 line."""
    text = line.rstrip("\n\r")
    if not text:
        raise GraphFormatError("empty graph6 line", offset=0)
    first = ord(text[0])
    if first == 126:
        raise GraphFormatError("long-form size prefix not supported (n > 62)", offset=0)
    if not 63 <= first <= 126:
        raise GraphFormatError(f"illegal size byte {text[0]!r}", offset=0)
    n = first - 63
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    payload = text[1:]
    if len(payload) < need_bytes:
        raise GraphFormatError(
            f"truncated bit payload: need {need_bytes} bytes, got {len(payload)}",
            offset=1 + len(payload))
    if len(payload) > need_bytes:
        raise GraphFormatError("trailing bytes after bit payload", offset=1 + need_bytes)

    bits = 0
    for i, ch in enumerate(payload):
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise GraphFormatError(f"illegal payload byte {ch!r}", offset=1 + i)
        bits = bits << 6 | value
    pad = need_bytes * 6 - need_bits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", offset=len(text) - 1)
    bits >>= pad

    edges = []
    # Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    position = need_bits - 1
    for col in range(1, n):
        for row in range(col):
            if bits >> position & 1:
                edges.append((row, col))
            position -= 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one short-form graph6 line (no newline)."""
    if g.n > _MAX_SHORT_N:
        raise GraphFormatError(f"short-form graph6 caps at n=62, got n={g.n}")
    bits = 0
    count = 0
    for col in range(1, g.n):
        column = g.adj[col]
        for row in range(col):
            bits = bits << 1 | (column >> row & 1)
            count += 1
    pad = (-count) % 6
    bits <<= pad
    count += pad
    chars = [chr(g.n + 63)]
    for shift in range(count - 6, -1, -6):
        chars.append(chr((bits >> shift & 0x3F) + 63))
    return "".join(chars)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped line) skipping blanks."""
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped:
            yield lineno, stripped


def parse_edge_list(text: str) -> Graph:
    """Decode the ``n`` + ``u v`` lines edge-list format."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"first line must be the vertex count, got {lines[0]!r}")
    if n < 0:
        raise GraphFormatError(f"vertex count must be nonnegative, got {n}")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint outside 0..{n - 1}")
        edges.append((u, v))
    return Graph(n, edges, labels=[str(i) for i in range(n)])


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
