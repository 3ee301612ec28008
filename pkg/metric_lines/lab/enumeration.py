"""Exhaustive small-graph corpora: labeled edge subsets and isomorphism classes.

A labeled graph on n vertices is encoded as an edge mask: bit k is set when
the k-th pair of ``itertools.combinations(range(n), 2)`` is an edge.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from functools import lru_cache

from metric_lines.core.errors import InputError
from metric_lines.core.graph import Graph, is_connected

logger = logging.getLogger(__name__)

LABELED_MAX_N = 7
CLASSES_MAX_N = 8


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_bits(n: int) -> tuple[tuple[int, ...], ...]:
    bits = [[0] * n for _ in range(n)]
    for k, (i, j) in enumerate(edge_pairs(n)):
        bits[i][j] = bits[j][i] = 1 << k
    return tuple(tuple(row) for row in bits)


def graph_from_mask(n: int, mask: int) -> Graph:
    rows: list[set[int]] = [set() for _ in range(n)]
    for k, (i, j) in enumerate(edge_pairs(n)):
        if mask >> k & 1:
            rows[i].add(j)
            rows[j].add(i)
    return Graph(n, tuple(frozenset(r) for r in rows))


def graph_mask(g: Graph) -> int:
    bits = _pair_bits(g.n)
    return sum(bits[u][v] for u, v in g.edges())


# ── canonical form ──────────────────────────────────────────────────────


def _refine(adj: tuple[frozenset[int], ...], colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition; colours are ranks of signatures."""
    count = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))
        ]
        rank = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [rank[sig] for sig in signatures]
        if len(rank) == count:
            return colors
        count = len(rank)


def _leaf_masks(g: Graph, colors: list[int]) -> Iterator[int]:
    """Masks of every discrete ordering reachable by individualize-and-refine."""
    n = g.n
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
    if target is None:
        bits = _pair_bits(n)
        yield sum(bits[colors[u]][colors[v]] for u, v in g.edges())
        return
    for chosen in cells[target]:
        split = [
            2 * c + (1 if c == target and v != chosen else 0) for v, c in enumerate(colors)
        ]
        yield from _leaf_masks(g, _refine(g.adjacency, split))


def canonical_form(g: Graph) -> int:
    """Minimum edge mask over the vertex orders the refinement search reaches.

    The orders are chosen by isomorphism-invariant rules, so isomorphic graphs
    share a canonical form and the form is itself a relabelling of ``g``.
    """
    start = _refine(g.adjacency, [len(nbrs) for nbrs in g.adjacency])
    return min(_leaf_masks(g, start))


def is_canonical(g: Graph) -> bool:
    return graph_mask(g) == canonical_form(g)


# ── corpora ─────────────────────────────────────────────────────────────


def _check_labeled_n(n: int, max_n: int) -> None:
    if not 2 <= n <= max_n:
        raise InputError(f"labeled enumeration needs 2 <= n <= {max_n}, got n={n}")


def mask_count(n: int) -> int:
    return 1 << len(edge_pairs(n))


def connected_graphs_in_range(
    n: int, start: int, stop: int, canonical: bool = False
) -> Iterator[tuple[int, Graph]]:
    """Connected graphs with masks in [start, stop), paired with their mask."""
    for mask in range(start, stop):
        # a connected graph has at least n-1 edges
        if mask.bit_count() < n - 1:
            continue
        g = graph_from_mask(n, mask)
        if not is_connected(g):
            continue
        if canonical and canonical_form(g) != mask:
            continue
        yield mask, g


def enumerate_connected_graphs(
    n: int, canonical: bool = False, max_n: int = LABELED_MAX_N
) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices, or one per isomorphism class."""
    _check_labeled_n(n, max_n)
    for _, g in connected_graphs_in_range(n, 0, mask_count(n), canonical):
        yield g


def enumerate_graph_classes(
    n: int, connected: bool = True, max_n: int = CLASSES_MAX_N
) -> list[Graph]:
    """One canonical representative per isomorphism class, by vertex augmentation.

    Every graph on k+1 vertices is some graph on k vertices plus a vertex, so
    extending each class representative in every way and deduplicating by
    canonical form reaches every class.
    """
    if not 1 <= n <= max_n:
        raise InputError(f"class enumeration needs 1 <= n <= {max_n}, got n={n}")
    level: dict[int, Graph] = {0: Graph(1, (frozenset(),))}
    for k in range(1, n):
        grown: dict[int, Graph] = {}
        for g in level.values():
            for subset in range(1 << k):
                rows = [set(nbrs) for nbrs in g.adjacency] + [set()]
                for v in range(k):
                    if subset >> v & 1:
                        rows[v].add(k)
                        rows[k].add(v)
                h = Graph(k + 1, tuple(frozenset(r) for r in rows))
                form = canonical_form(h)
                if form not in grown:
                    grown[form] = graph_from_mask(k + 1, form)
        level = grown
        logger.debug("%d isomorphism classes on %d vertices", len(level), k + 1)
    graphs = [level[form] for form in sorted(level)]
    if connected:
        graphs = [g for g in graphs if is_connected(g)]
    return graphs
