"""Distance-hereditary recognition: pendant/twin elimination plus a definitional oracle."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Union

from metric_lines.core.errors import DisconnectedError, InputError
from metric_lines.core.graph import Graph, bfs_distances, induced_subgraph, is_connected
from metric_lines.hereditary.construction import (
    ConstructionSequence,
    ConstructionStep,
    StepKind,
)

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_N = 12


@dataclass(frozen=True, slots=True)
class NotDH:
    """Elimination got stuck: no pendant vertex and no twins in ``residual``.

    ``vertices`` lists the input-graph vertices of the residual, which is
    relabelled 0..k-1 in that order.
    """

    vertices: tuple[int, ...]
    residual: Graph


@dataclass(frozen=True, slots=True)
class DistanceWitness:
    """Connected induced subgraph on ``subset`` that stretches d(x, y)."""

    subset: tuple[int, ...]
    x: int
    y: int
    subgraph_distance: int
    graph_distance: int


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError("distance-hereditary recognition needs a connected graph")


def _eliminable(
    alive: set[int], adj: tuple[frozenset[int], ...], v: int
) -> Optional[tuple[StepKind, int]]:
    """How ``v`` can be removed from G[alive]: pendant, then false twin, then true twin."""
    nbrs = adj[v] & alive
    if len(nbrs) == 1:
        return "pendant", next(iter(nbrs))
    true_twin: Optional[int] = None
    for u in sorted(alive):
        if u == v:
            continue
        if (adj[u] & alive) - {v} == nbrs - {u}:
            if u not in nbrs:
                return "false_twin", u
            if true_twin is None:
                true_twin = u
    if true_twin is not None:
        return "true_twin", true_twin
    return None


def recognize_pruning(g: Graph) -> Union[ConstructionSequence, NotDH]:
    """Delete pendant vertices and twins until one vertex is left.

    Vertices are scanned in increasing index and the first eligible one is
    removed, so the elimination order (and the certificate) is reproducible.
    The deletions replayed backwards form the construction sequence; ``origin``
    maps construction labels back to ``g``'s vertices.
    """
    _require_connected(g)
    alive = set(g.vertices)
    removed: list[tuple[int, StepKind, int]] = []
    while len(alive) > 1:
        for v in sorted(alive):
            move = _eliminable(alive, g.adjacency, v)
            if move is not None:
                kind, anchor = move
                removed.append((v, kind, anchor))
                alive.discard(v)
                break
        else:
            kept = tuple(sorted(alive))
            residual, _ = induced_subgraph(g, kept)
            logger.debug("pruning stuck with %d of %d vertices left", len(kept), g.n)
            return NotDH(vertices=kept, residual=residual)

    (last,) = alive
    origin = [last] + [v for v, _, _ in reversed(removed)]
    label = {v: i for i, v in enumerate(origin)}
    steps = tuple(
        ConstructionStep(kind, label[v], label[anchor]) for v, kind, anchor in reversed(removed)
    )
    return ConstructionSequence(steps=steps, origin=tuple(origin))


def is_distance_hereditary(g: Graph) -> bool:
    return isinstance(recognize_pruning(g), ConstructionSequence)


def recognize_bruteforce(
    g: Graph, max_n: int = BRUTEFORCE_MAX_N
) -> tuple[bool, Optional[DistanceWitness]]:
    """Check the definition directly over every connected induced subgraph.

    Subsets are tried by increasing size, so a witness is a smallest one.
    """
    _require_connected(g)
    if g.n > max_n:
        raise InputError(f"brute-force recognition is limited to n <= {max_n}, got n={g.n}")
    full = [bfs_distances(g, v) for v in g.vertices]
    for size in range(3, g.n):
        for subset in itertools.combinations(g.vertices, size):
            h, index = induced_subgraph(g, subset)
            local = [bfs_distances(h, i) for i in range(h.n)]
            if -1 in local[0]:
                continue
            for x, y in itertools.combinations(subset, 2):
                dh = local[index[x]][index[y]]
                if dh != full[x][y]:
                    return False, DistanceWitness(subset, x, y, dh, full[x][y])
    return True, None
