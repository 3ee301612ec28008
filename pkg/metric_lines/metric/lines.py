"""Betweenness, the line operator, and distinct-line bookkeeping."""

from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass
from typing import Any

from metric_lines.core.errors import InputError
from metric_lines.metric.space import FiniteMetric

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Line:
    generators: tuple[int, int]
    members: tuple[int, ...]

    def __contains__(self, p: object) -> bool:
        return p in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True, slots=True)
class LineSet:
    """Distinct lines of a metric, with the line index of every generator pair.

    ``lines`` are ordered by first appearance over pairs in lexicographic order.
    """

    n: int
    lines: tuple[tuple[int, ...], ...]
    generators: dict[tuple[int, int], int]

    @property
    def distinct_lines(self) -> int:
        return len(self.lines)

    @property
    def has_universal(self) -> bool:
        return any(len(members) == self.n for members in self.lines)

    def line_for(self, u: int, v: int) -> tuple[int, ...]:
        key = (u, v) if u < v else (v, u)
        try:
            return self.lines[self.generators[key]]
        except KeyError as exc:
            raise InputError(f"no line generated by ({u}, {v})") from exc

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "distinct_lines": self.distinct_lines,
            "has_universal": self.has_universal,
            "lines": [list(members) for members in self.lines],
            "generators": {f"{u},{v}": idx for (u, v), idx in self.generators.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _distinct(*points: int) -> None:
    if len(set(points)) != len(points):
        raise InputError(f"points {points} must be pairwise distinct")


def between(m: FiniteMetric, a: int, b: int, c: int) -> bool:
    """[abc]: d(a,b) + d(b,c) = d(a,c) on three distinct points."""
    for p in (a, b, c):
        m.check_point(p)
    _distinct(a, b, c)
    d = m.d
    return d[a][b] + d[b][c] == d[a][c]


def _line_members(d: tuple[tuple[int, ...], ...], u: int, v: int) -> tuple[int, ...]:
    duv = d[u][v]
    du, dv = d[u], d[v]
    return tuple(
        p
        for p in range(len(d))
        if p == u
        or p == v
        or du[p] + duv == dv[p]
        or du[p] + dv[p] == duv
        or duv + dv[p] == du[p]
    )


def line_of(m: FiniteMetric, u: int, v: int) -> Line:
    """{u,v} together with every p for which [puv], [upv] or [uvp] holds."""
    m.check_point(u)
    m.check_point(v)
    _distinct(u, v)
    return Line(generators=(min(u, v), max(u, v)), members=_line_members(m.d, u, v))


def ext_set(m: FiniteMetric, x: int, y: int) -> frozenset[int]:
    """Ext(x, y) = {z : [xyz]}."""
    m.check_point(x)
    m.check_point(y)
    _distinct(x, y)
    d = m.d
    return frozenset(z for z in m.points if z not in (x, y) and d[x][y] + d[y][z] == d[x][z])


def interval_open(m: FiniteMetric, x: int, y: int) -> frozenset[int]:
    """I(x, y) = {z : [xzy]}."""
    m.check_point(x)
    m.check_point(y)
    _distinct(x, y)
    d = m.d
    return frozenset(z for z in m.points if z not in (x, y) and d[x][z] + d[z][y] == d[x][y])


def interval_half(m: FiniteMetric, x: int, y: int) -> frozenset[int]:
    """I[x, y) = {x} ∪ I(x, y)."""
    return interval_open(m, x, y) | {x}


def interval_closed(m: FiniteMetric, x: int, y: int) -> frozenset[int]:
    """I[x, y] = {x, y} ∪ I(x, y)."""
    return interval_open(m, x, y) | {x, y}


def is_universal(m: FiniteMetric, line: Line) -> bool:
    """A line is universal when it contains every point of ``m``."""
    return len(line.members) == m.n


def all_lines(m: FiniteMetric) -> LineSet:
    """One line per unordered pair, deduplicated by member set."""
    if m.n < 2:
        raise InputError("lines need at least two points")
    index: dict[tuple[int, ...], int] = {}
    generators: dict[tuple[int, int], int] = {}
    for u, v in itertools.combinations(m.points, 2):
        members = _line_members(m.d, u, v)
        generators[(u, v)] = index.setdefault(members, len(index))
    lines = tuple(index)
    logger.debug("%d-point metric: %d distinct lines", m.n, len(lines))
    return LineSet(n=m.n, lines=lines, generators=generators)
