"""Finite metric spaces with integral distances."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from metric_lines.core.errors import InputError, MetricError

logger = logging.getLogger(__name__)

# Distances are unsigned 32-bit quantities; scaling past this is an error.
MAX_DISTANCE = 2**32 - 1

Number = Union[int, Fraction]
ViolationKind = Literal["shape", "type", "diagonal", "symmetry", "positivity", "triangle"]


@dataclass(frozen=True, slots=True)
class MetricViolation:
    kind: ViolationKind
    points: tuple[int, ...]
    message: str


@dataclass(frozen=True, slots=True)
class FiniteMetric:
    """Symmetric integer distance matrix on points 0..n-1.

    Built unchecked by trusted producers (graph BFS, scaling); untrusted
    matrices go through :func:`validate_metric`.
    """

    d: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def k(self) -> int:
        """Largest distance: the metric is a k-metric space for this k."""
        return max(self.d[u][v] for u in range(self.n) for v in range(u + 1, self.n))

    @property
    def points(self) -> range:
        return range(self.n)

    def distance(self, u: int, v: int) -> int:
        self.check_point(u)
        self.check_point(v)
        return self.d[u][v]

    def check_point(self, p: int) -> None:
        if not 0 <= p < self.n:
            raise InputError(f"point {p} out of range [0, {self.n})")

    def restrict(self, points: Sequence[int]) -> FiniteMetric:
        """Sub-metric on ``points``, relabelled in the given order."""
        chosen = list(points)
        if len(set(chosen)) != len(chosen) or len(chosen) < 2:
            raise InputError("restriction needs at least two distinct points")
        for p in chosen:
            self.check_point(p)
        return FiniteMetric(tuple(tuple(self.d[a][b] for b in chosen) for a in chosen))

    def as_rows(self) -> list[list[int]]:
        return [list(row) for row in self.d]


def metric_violations(matrix: Sequence[Sequence[Number]]) -> list[MetricViolation]:
    """Every metric axiom the matrix breaks; empty when it is a valid metric."""
    n = len(matrix)
    out: list[MetricViolation] = []
    if n < 2:
        return [MetricViolation("shape", (), f"a metric needs at least two points, got {n}")]
    for i, row in enumerate(matrix):
        if len(row) != n:
            out.append(MetricViolation("shape", (i,), f"row {i} has {len(row)} entries, expected {n}"))
    if out:
        return out

    for u in range(n):
        for v in range(n):
            value = matrix[u][v]
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                out.append(
                    MetricViolation("type", (u, v), f"d({u},{v}) = {value!r} is not an exact number")
                )
    if out:
        return out

    for u in range(n):
        if matrix[u][u] != 0:
            out.append(MetricViolation("diagonal", (u,), f"d({u},{u}) = {matrix[u][u]}, expected 0"))
    for u, v in itertools.combinations(range(n), 2):
        if matrix[u][v] != matrix[v][u]:
            out.append(
                MetricViolation(
                    "symmetry", (u, v), f"d({u},{v}) = {matrix[u][v]} but d({v},{u}) = {matrix[v][u]}"
                )
            )
        if matrix[u][v] <= 0 or matrix[v][u] <= 0:
            out.append(
                MetricViolation("positivity", (u, v), f"d({u},{v}) must be positive for distinct points")
            )
    for u, v, w in itertools.permutations(range(n), 3):
        if u < w and matrix[u][w] > matrix[u][v] + matrix[v][w]:
            out.append(
                MetricViolation(
                    "triangle",
                    (u, v, w),
                    f"d({u},{w}) = {matrix[u][w]} > d({u},{v}) + d({v},{w}) = "
                    f"{matrix[u][v] + matrix[v][w]}",
                )
            )
    return out


def validate_metric(matrix: Sequence[Sequence[Number]]) -> FiniteMetric:
    """Check an integral matrix against the metric axioms.

    Raises :class:`MetricError` whose ``violations`` lists every failure.
    """
    violations = metric_violations(matrix)
    if not violations:
        for u, row in enumerate(matrix):
            for v, value in enumerate(row):
                if isinstance(value, Fraction) and value.denominator != 1:
                    violations.append(
                        MetricViolation("type", (u, v), f"d({u},{v}) = {value} is not integral")
                    )
                elif value > MAX_DISTANCE:
                    violations.append(
                        MetricViolation("type", (u, v), f"d({u},{v}) = {value} exceeds {MAX_DISTANCE}")
                    )
    if violations:
        raise MetricError(f"{len(violations)} metric violation(s)", violations)
    return FiniteMetric(tuple(tuple(int(x) for x in row) for row in matrix))


def scale_metric(m: FiniteMetric, factor: int) -> FiniteMetric:
    """Multiply every distance by a positive integer; betweenness is unchanged."""
    if factor < 1:
        raise InputError(f"scale factor must be a positive integer, got {factor}")
    if m.k * factor > MAX_DISTANCE:
        raise MetricError(f"scaling by {factor} overflows the distance range ({MAX_DISTANCE})")
    return FiniteMetric(tuple(tuple(x * factor for x in row) for row in m.d))


def integralize_rational(matrix: Sequence[Sequence[Number]]) -> FiniteMetric:
    """Scale a rational metric by the LCM of its denominators.

    Positive scaling preserves every betweenness equation, so the result has
    the same lines under the same point labels.
    """
    violations = metric_violations(matrix)
    if violations:
        raise MetricError(f"{len(violations)} metric violation(s)", violations)
    values = [Fraction(x) for row in matrix for x in row]
    scale = math.lcm(*(x.denominator for x in values))
    logger.debug("integralizing %d-point metric with scale %d", len(matrix), scale)
    scaled = [[Fraction(x) * scale for x in row] for row in matrix]
    if max(max(row) for row in scaled) > MAX_DISTANCE:
        raise MetricError(f"scaling by {scale} overflows the distance range ({MAX_DISTANCE})")
    return FiniteMetric(tuple(tuple(int(x) for x in row) for row in scaled))


def shortest_path_metric(weights: Sequence[Sequence[int]]) -> FiniteMetric:
    """Floyd–Warshall closure of a positive symmetric weight matrix."""
    n = len(weights)
    if n < 2:
        raise InputError("a metric needs at least two points")
    dist = [list(row) for row in weights]
    for u in range(n):
        if len(dist[u]) != n:
            raise InputError(f"weight row {u} has {len(dist[u])} entries, expected {n}")
        dist[u][u] = 0
        for v in range(n):
            if u != v and (dist[u][v] <= 0 or dist[u][v] != weights[v][u]):
                raise InputError(f"weight ({u},{v}) must be positive and symmetric")
    for via in range(n):
        row_via = dist[via]
        for u in range(n):
            through = dist[u][via]
            row_u = dist[u]
            for v in range(n):
                if through + row_via[v] < row_u[v]:
                    row_u[v] = through + row_via[v]
    return FiniteMetric(tuple(tuple(row) for row in dist))
