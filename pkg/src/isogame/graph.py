"""Immutable simple undirected graphs over dense integer vertices.

Vertices are ``0 .. n-1``. Vertex sets are plain ``int`` bitmasks (bit ``v``
set means vertex ``v`` is a member), which keeps solver state keys cheap and
set algebra down to ``| & ^ ~``. :func:`vertex_set` and :func:`vertices_of`
convert between masks and iterables at API boundaries.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GraphDomainError

INFINITE_DIAMETER = float("inf")


def vertex_set(vertices: Iterable[int]) -> int:
    """Build a bitmask from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Expand a bitmask into a sorted tuple of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph with cached structural data.

    Instances are immutable after construction and safe to share across
    workers. ``labels`` keeps the caller's vertex names for reports; when
    omitted, vertex ``i`` is displayed as ``v{i+1}``.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphDomainError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphDomainError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphDomainError(f"self-loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            edge_set.add((min(u, v), max(u, v)))
        if labels is not None and len(labels) != n:
            raise GraphDomainError(f"expected {n} labels, got {len(labels)}")
        self._n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(edge_set))
        self._labels = tuple(labels) if labels is not None else None
        self._full = (1 << n) - 1

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def adj(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks."""
        return self._adj

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def full_mask(self) -> int:
        """Bitmask of the whole vertex set."""
        return self._full

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return vertices_of(self._adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self._labels[v] if self._labels is not None else f"v{v + 1}"

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.label(v) for v in range(self._n))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphDomainError(f"vertex {v} outside range 0..{self._n - 1}")

    def _check_subset(self, mask: int) -> None:
        if mask < 0 or mask & ~self._full:
            raise GraphDomainError(f"vertex set {mask:#x} not a subset of 0..{self._n - 1}")

    # -- cached structure --------------------------------------------------

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self._adj)

    @cached_property
    def min_degree(self) -> int:
        if self._n == 0:
            raise GraphDomainError("degree undefined on the empty graph")
        return min(self.degrees)

    @cached_property
    def max_degree(self) -> int:
        if self._n == 0:
            raise GraphDomainError("degree undefined on the empty graph")
        return max(self.degrees)

    @cached_property
    def components(self) -> tuple[int, ...]:
        """Connected components as bitmasks, ordered by smallest member."""
        if self._n == 0:
            raise GraphDomainError("components undefined on the empty graph")
        seen = 0
        comps = []
        for v in range(self._n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                grow = 0
                for u in iter_bits(frontier):
                    grow |= self._adj[u]
                frontier = grow & ~comp
                comp |= frontier
            comps.append(comp)
            seen |= comp
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def component_of(self, v: int) -> int:
        self._check_vertex(v)
        for comp in self.components:
            if comp >> v & 1:
                return comp
        raise AssertionError("component partition must cover every vertex")

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs BFS distances; unreachable pairs get -1."""
        rows = []
        for s in range(self._n):
            dist = [-1] * self._n
            dist[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in iter_bits(self._adj[u]):
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            rows.append(tuple(dist))
        return tuple(rows)

    def distance(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.distances[u][v]

    @cached_property
    def diameter(self) -> float:
        """Maximum pairwise distance; ``INFINITE_DIAMETER`` when disconnected.

        The sentinel is deliberately not an integer so that predicates like
        "diameter at most 2" can never silently hold on disconnected input.
        """
        if self._n == 0:
            raise GraphDomainError("diameter undefined on the empty graph")
        if not self.is_connected():
            return INFINITE_DIAMETER
        return float(max(max(row) for row in self.distances))

    # -- misc --------------------------------------------------------------

    def __reduce__(self):
        return (Graph, (self._n, self._edges, self._labels))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def induced_subgraph(g: Graph, members: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on a vertex mask, plus the local-to-original map."""
    g._check_subset(members)
    originals = vertices_of(members)
    index = {v: i for i, v in enumerate(originals)}
    edges = [(index[u], index[v]) for u, v in g.edges
             if members >> u & 1 and members >> v & 1]
    labels = [g.label(v) for v in originals] if g._labels is not None else None
    return Graph(len(originals), edges, labels=labels), originals


# -- neighborhood and set predicates ---------------------------------------

def open_neighborhood(g: Graph, members: int) -> int:
    """Union of the neighbor sets of ``members``; may intersect ``members``."""
    g._check_subset(members)
    out = 0
    for v in iter_bits(members):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, members: int) -> int:
    """Open neighborhood together with ``members`` itself."""
    return open_neighborhood(g, members) | members


def is_independent(g: Graph, members: int) -> bool:
    """True when no edge joins two members."""
    g._check_subset(members)
    return all(g.adj[v] & members == 0 for v in iter_bits(members))


def is_packing(g: Graph, members: int) -> bool:
    """True when members are pairwise at distance at least 3.

    Equivalently the members' closed neighborhoods are pairwise disjoint.
    """
    g._check_subset(members)
    covered = 0
    for v in iter_bits(members):
        ball = g.adj[v] | 1 << v
        if ball & covered:
            return False
        covered |= ball
    return True
