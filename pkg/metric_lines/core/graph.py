"""Simple undirected graphs on vertices 0..n-1 and their shortest-path machinery."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal, NamedTuple

import networkx as nx

from metric_lines.core.errors import DisconnectedError, InputError

if TYPE_CHECKING:
    from metric_lines.metric.space import FiniteMetric

logger = logging.getLogger(__name__)

TwinKind = Literal["true", "false"]


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph stored as one neighbour set per vertex."""

    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise InputError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise InputError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InputError(f"vertex {u} out of range [0, {self.n})")
                if v not in self.adjacency[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")

    # ── accessors ───────────────────────────────────────────────────────

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range [0, {self.n})")

    def relabel(self, mapping: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed ``mapping[v]``; mapping must be a permutation."""
        if sorted(mapping) != list(range(self.n)):
            raise InputError("relabelling must be a permutation of the vertices")
        rows: list[set[int]] = [set() for _ in range(self.n)]
        for v, nbrs in enumerate(self.adjacency):
            rows[mapping[v]] = {mapping[u] for u in nbrs}
        return Graph(self.n, tuple(frozenset(r) for r in rows))


@dataclass(frozen=True, slots=True)
class BfsLevels:
    """Distance layers S_i(source) of a breadth-first search."""

    source: int
    levels: tuple[frozenset[int], ...]
    unreachable: frozenset[int] = field(default_factory=frozenset)

    @property
    def eccentricity(self) -> int:
        return len(self.levels) - 1

    def level_of(self, v: int) -> int | None:
        for i, level in enumerate(self.levels):
            if v in level:
                return i
        return None


class Twin(NamedTuple):
    u: int
    v: int
    kind: TwinKind


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicate edges collapse, self-loops are rejected."""
    if n < 1:
        raise InputError(f"graph needs at least one vertex, got n={n}")
    rows: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise InputError(f"edge ({u}, {v}): vertex {w} out of range [0, {n})")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        rows[u].add(v)
        rows[v].add(u)
    return Graph(n, tuple(frozenset(r) for r in rows))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distance from ``source`` to every vertex; -1 marks unreachable vertices."""
    g.check_vertex(source)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def bfs_levels(g: Graph, x: int) -> BfsLevels:
    """Vertices grouped by distance from ``x``; unreachable ones are kept apart."""
    dist = bfs_distances(g, x)
    depth = max(dist)
    levels: list[set[int]] = [set() for _ in range(depth + 1)]
    unreachable: set[int] = set()
    for v, d in enumerate(dist):
        if d < 0:
            unreachable.add(v)
        else:
            levels[d].add(v)
    return BfsLevels(
        source=x,
        levels=tuple(frozenset(level) for level in levels),
        unreachable=frozenset(unreachable),
    )


def all_pairs_distances(g: Graph) -> FiniteMetric:
    """Shortest-path metric of a connected graph (one BFS per vertex)."""
    from metric_lines.metric.space import FiniteMetric

    if g.n < 2:
        raise InputError("a metric needs at least two points")
    rows = []
    for v in g.vertices:
        dist = bfs_distances(g, v)
        if -1 in dist:
            raise DisconnectedError(
                f"graph is disconnected: vertex {dist.index(-1)} unreachable from {v}"
            )
        rows.append(tuple(dist))
    return FiniteMetric(tuple(rows))


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0."""
    return -1 not in bfs_distances(g, 0)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points, every component included."""
    return frozenset(nx.articulation_points(to_networkx(g)))


def is_two_connected(g: Graph) -> bool:
    """Connected with no cut vertex; needs at least three vertices."""
    if g.n < 3:
        raise InputError(f"2-connectivity is only defined here for n >= 3, got n={g.n}")
    return bool(nx.is_biconnected(to_networkx(g)))


def find_twins(g: Graph) -> list[Twin]:
    """All pairs u < v with N(u) - {v} = N(v) - {u}, tagged true (adjacent) or false."""
    twins: list[Twin] = []
    adj = g.adjacency
    for u in g.vertices:
        for v in range(u + 1, g.n):
            if adj[u] - {v} == adj[v] - {u}:
                twins.append(Twin(u, v, "true" if v in adj[u] else "false"))
    return twins


def edge_in_triangle(g: Graph, u: int, v: int) -> bool:
    """True when the edge uv has a common neighbour."""
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    return bool(g.adjacency[u] & g.adjacency[v])


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G[S] relabelled to 0..|S|-1 in increasing order, with the old -> new index map."""
    kept = sorted(set(s))
    if not kept:
        raise InputError("induced subgraph needs a nonempty vertex set")
    for v in kept:
        g.check_vertex(v)
    index = {old: new for new, old in enumerate(kept)}
    rows = tuple(
        frozenset(index[u] for u in g.adjacency[old] if u in index) for old in kept
    )
    return Graph(len(kept), rows), index


def without_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """G - v, relabelled as :func:`induced_subgraph` does."""
    return induced_subgraph(g, (w for w in g.vertices if w != v))


def is_chordal(g: Graph) -> bool:
    return bool(nx.is_chordal(to_networkx(g)))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Convert a networkx graph, renaming its nodes 0..n-1 in sorted order."""
    nodes = sorted(h.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return from_edge_list(len(nodes), [(index[a], index[b]) for a, b in h.edges()])
