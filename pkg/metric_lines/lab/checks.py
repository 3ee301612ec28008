"""Per-instance checks: the conjecture predicate, the main theorem, and the two lemmas."""

from __future__ import annotations

import itertools
import logging
from typing import NamedTuple, Optional

from metric_lines.core.errors import InputError, NotDistanceHereditaryError
from metric_lines.core.graph import (
    Graph,
    all_pairs_distances,
    edge_in_triangle,
    find_twins,
    without_vertex,
)
from metric_lines.hereditary.recognition import NotDH, recognize_pruning
from metric_lines.lab.models import Verdict
from metric_lines.metric.lines import LineSet, all_lines
from metric_lines.metric.space import FiniteMetric

logger = logging.getLogger(__name__)


class TwinLiftWitness(NamedTuple):
    """Twin pair (x, y) and a pair s, t whose line in G breaks the lifting rule."""

    x: int
    y: int
    s: int
    t: int


def _verdict(instance: str, lines: LineSet, witness: Optional[dict] = None) -> Verdict:
    satisfies = lines.distinct_lines >= lines.n or lines.has_universal
    return Verdict(
        instance=instance,
        n=lines.n,
        distinct_lines=lines.distinct_lines,
        has_universal=lines.has_universal,
        satisfies=satisfies,
        witness=None if satisfies else witness,
    )


def _require_dh(g: Graph) -> None:
    result = recognize_pruning(g)
    if isinstance(result, NotDH):
        raise NotDistanceHereditaryError(
            f"graph is not distance-hereditary: pruning stuck on vertices {list(result.vertices)}"
        )


def check_chen_chvatal(m: FiniteMetric, instance: str = "metric") -> Verdict:
    """At least n distinct lines or a universal line; a failure carries the metric."""
    if m.n < 2:
        raise InputError("the conjecture is stated for n >= 2 points")
    verdict = _verdict(instance, all_lines(m), {"matrix": m.as_rows()})
    if not verdict.satisfies:
        logger.error("counterexample to the conjecture: %s", instance)
    return verdict


def check_graph(g: Graph, instance: str = "graph") -> Verdict:
    """The conjecture predicate on the metric of a connected graph."""
    verdict = _verdict(instance, all_lines(all_pairs_distances(g)), {"n": g.n, "edges": g.edges()})
    if not verdict.satisfies:
        logger.error("counterexample to the conjecture: %s", instance)
    return verdict


def check_main_theorem(g: Graph, instance: str = "graph", recognized: bool = False) -> Verdict:
    """The conjecture predicate on a connected distance-hereditary graph.

    ``recognized`` skips re-running recognition for callers that already did.
    """
    if g.n < 2:
        raise InputError("the theorem is stated for n >= 2 vertices")
    if not recognized:
        _require_dh(g)
    return check_graph(g, instance)


def verify_lemma_triangle(
    g: Graph, recognized: bool = False
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Every edge xy lies in a triangle or spans a universal line."""
    if not recognized:
        _require_dh(g)
    if g.n < 2:
        return True, None
    lines = all_lines(all_pairs_distances(g))
    for x, y in g.edges():
        if edge_in_triangle(g, x, y):
            continue
        if len(lines.line_for(x, y)) != g.n:
            return False, (x, y)
    return True, None


def verify_lemma_xaxb(
    g: Graph, recognized: bool = False
) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Whenever line(x,a) = line(x,b), line(a,b) is universal or [axb]."""
    if not recognized:
        _require_dh(g)
    if g.n < 3:
        return True, None
    metric = all_pairs_distances(g)
    d = metric.d
    lines = all_lines(metric)
    gen = lines.generators

    def idx(u: int, v: int) -> int:
        return gen[(u, v) if u < v else (v, u)]

    for x in g.vertices:
        for a, b in itertools.combinations(g.vertices, 2):
            if x in (a, b) or idx(x, a) != idx(x, b):
                continue
            if len(lines.lines[idx(a, b)]) == g.n or d[a][x] + d[x][b] == d[a][b]:
                continue
            return False, (x, a, b)
    return True, None


def verify_twin_lifting(
    g: Graph, recognized: bool = False
) -> tuple[bool, Optional[TwinLiftWitness]]:
    """Lines of G against lines of G - y for every twin pair {x, y}.

    For s, t != y: if x is s or t, the G-line is the (G - y)-line with or
    without y; otherwise it gains y exactly when it contains x.
    """
    if not recognized:
        _require_dh(g)
    if g.n < 3:
        return True, None
    lines_g = all_lines(all_pairs_distances(g))
    for twin in find_twins(g):
        for x, y in ((twin.u, twin.v), (twin.v, twin.u)):
            h, index = without_vertex(g, y)
            back = {new: old for old, new in index.items()}
            lines_h = all_lines(all_pairs_distances(h))
            for s, t in itertools.combinations(sorted(index), 2):
                in_g = set(lines_g.line_for(s, t))
                in_h = {back[p] for p in lines_h.line_for(index[s], index[t])}
                if x in (s, t):
                    ok = in_g in (in_h, in_h | {y})
                elif x in in_h:
                    ok = in_g == in_h | {y}
                else:
                    ok = in_g == in_h
                if not ok:
                    return False, TwinLiftWitness(x, y, s, t)
    return True, None


def multipartite_line_count(parts: int, size: int) -> int:
    """Distinct lines of the complete multipartite graph with equal parts, by pair type.

    Two vertices of one part span {u, v} plus every other part, a different
    line for every such pair; two vertices of different parts span the union
    of their two parts, one line per pair of parts. Parts of size 2 make the
    first kind universal and collapse it, so they are excluded.
    """
    if parts < 2 or size < 1:
        raise InputError(f"need at least 2 parts of positive size, got {parts} x {size}")
    if size == 2:
        raise InputError("parts of size 2 collapse the same-part lines into one universal line")
    return parts * size * (size - 1) // 2 + parts * (parts - 1) // 2
