"""Verifiers for the structural properties of distance-hereditary graphs.

DH1: every cycle of length >= 5 has two crossing chords.
DH2: adjacent vertices on a BFS level see the same vertices on the level below.
DH3: a 2-connected DH graph on >= 4 vertices has two disjoint pairs of twins.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from typing import NamedTuple, Optional

import networkx as nx

from metric_lines.core.errors import DisconnectedError, InputError
from metric_lines.core.graph import Graph, bfs_levels, find_twins, is_connected, to_networkx

logger = logging.getLogger(__name__)

CYCLE_MAX_N = 12


class LevelWitness(NamedTuple):
    source: int
    u: int
    v: int


def _normalized(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if rotated[1] > rotated[-1]:
        rotated = rotated[:1] + rotated[:0:-1]
    return tuple(rotated)


def simple_cycles(g: Graph, min_length: int = 3) -> Iterator[tuple[int, ...]]:
    """Each simple cycle once, as a vertex tuple starting at its smallest vertex.

    The second vertex is smaller than the last, which fixes the direction.
    """
    for cycle in nx.simple_cycles(to_networkx(g), length_bound=g.n):
        if len(cycle) >= min_length:
            yield _normalized(cycle)


def _has_crossing_chords(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    chords = [
        (i, j)
        for i, j in itertools.combinations(range(k), 2)
        if j - i not in (1, k - 1) and cycle[j] in g.adjacency[cycle[i]]
    ]
    return any(
        a < c < b < d or c < a < d < b for (a, b), (c, d) in itertools.combinations(chords, 2)
    )


def verify_dh1_crossing_chords(
    g: Graph, max_n: int = CYCLE_MAX_N
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Every cycle of length >= 5 has two crossing chords; a failure returns the cycle.

    Graphs above ``max_n`` are refused.
    """
    if g.n > max_n:
        raise InputError(f"cycle enumeration is limited to n <= {max_n}, got n={g.n}")
    for cycle in simple_cycles(g, min_length=5):
        if not _has_crossing_chords(g, cycle):
            return False, cycle
    return True, None


def verify_dh2_level_neighborhoods(g: Graph) -> tuple[bool, Optional[LevelWitness]]:
    """For every BFS source, adjacent vertices of one level share their lower neighbours."""
    if not is_connected(g):
        raise DisconnectedError("level neighbourhoods need a connected graph")
    adj = g.adjacency
    for x in g.vertices:
        levels = bfs_levels(g, x).levels
        for below, level in zip(levels, levels[1:]):
            for u in sorted(level):
                for v in sorted(adj[u] & level):
                    if u < v and adj[u] & below != adj[v] & below:
                        return False, LevelWitness(x, u, v)
    return True, None


def find_disjoint_twin_pairs(
    g: Graph,
) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """Lexicographically smallest two vertex-disjoint twin pairs, if any."""
    pairs = [(t.u, t.v) for t in find_twins(g)]
    for first, second in itertools.combinations(pairs, 2):
        if not set(first) & set(second):
            return first, second
    return None
