"""Tests for metric validation, scaling and integralization."""

from fractions import Fraction

import pytest

from metric_lines.core.errors import InputError, MetricError
from metric_lines.metric.space import (
    MAX_DISTANCE,
    FiniteMetric,
    integralize_rational,
    metric_violations,
    scale_metric,
    shortest_path_metric,
    validate_metric,
)

P3 = [[0, 1, 2], [1, 0, 1], [2, 1, 0]]


class TestValidateMetric:
    def test_path_metric(self):
        m = validate_metric(P3)
        assert m.n == 3
        assert m.k == 2

    def test_triangle_violation(self):
        with pytest.raises(MetricError) as exc_info:
            validate_metric([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
        kinds = {(v.kind, v.points) for v in exc_info.value.violations}
        assert ("triangle", (0, 1, 2)) in kinds

    def test_symmetry_violation_names_indices(self):
        violations = metric_violations([[0, 1], [2, 0]])
        assert [(v.kind, v.points) for v in violations] == [("symmetry", (0, 1))]

    def test_diagonal_and_positivity(self):
        kinds = {v.kind for v in metric_violations([[1, 0], [0, 0]])}
        assert kinds == {"diagonal", "positivity"}

    def test_shape(self):
        assert metric_violations([[0, 1], [1]])[0].kind == "shape"

    def test_single_point(self):
        assert metric_violations([[0]])[0].kind == "shape"

    def test_floats_rejected(self):
        assert metric_violations([[0, 1.5], [1.5, 0]])[0].kind == "type"

    def test_non_integral_rejected(self):
        with pytest.raises(MetricError):
            validate_metric([[0, Fraction(1, 2)], [Fraction(1, 2), 0]])

    def test_overflow_rejected(self):
        with pytest.raises(MetricError, match="violation"):
            validate_metric([[0, MAX_DISTANCE + 1], [MAX_DISTANCE + 1, 0]])

    def test_metric_error_is_input_error(self):
        with pytest.raises(InputError):
            validate_metric([[0, 1, 5], [1, 0, 1], [5, 1, 0]])


class TestFiniteMetric:
    def test_restrict(self):
        m = FiniteMetric(tuple(tuple(r) for r in P3))
        assert m.restrict([2, 0]).d == ((0, 2), (2, 0))

    def test_restrict_needs_distinct_points(self):
        m = FiniteMetric(tuple(tuple(r) for r in P3))
        with pytest.raises(InputError):
            m.restrict([1, 1])

    def test_distance_checks_range(self):
        m = FiniteMetric(tuple(tuple(r) for r in P3))
        with pytest.raises(InputError, match="out of range"):
            m.distance(0, 3)


class TestScaling:
    def test_scale(self):
        m = scale_metric(validate_metric(P3), 3)
        assert m.d[0][2] == 6

    def test_scale_factor_positive(self):
        with pytest.raises(InputError):
            scale_metric(validate_metric(P3), 0)

    def test_scale_overflow(self):
        with pytest.raises(MetricError, match="overflows"):
            scale_metric(validate_metric(P3), MAX_DISTANCE)


class TestIntegralize:
    def test_halved_path(self):
        h = Fraction(1, 2)
        m = integralize_rational([[0, h, 1], [h, 0, h], [1, h, 0]])
        assert m.as_rows() == P3

    def test_integral_input_unchanged(self):
        assert integralize_rational(P3).as_rows() == P3

    def test_thirds(self):
        a, b = Fraction(2, 3), Fraction(1, 3)
        m = integralize_rational([[0, a, 1], [a, 0, b], [1, b, 0]])
        assert m.as_rows() == [[0, 2, 3], [2, 0, 1], [3, 1, 0]]

    def test_rejects_non_metric(self):
        h = Fraction(1, 2)
        with pytest.raises(MetricError):
            integralize_rational([[0, h, 5], [h, 0, h], [5, h, 0]])


class TestShortestPathMetric:
    def test_closure(self):
        m = shortest_path_metric([[0, 1, 9], [1, 0, 1], [9, 1, 0]])
        assert m.as_rows() == P3
        assert metric_violations(m.as_rows()) == []

    def test_rejects_asymmetric(self):
        with pytest.raises(InputError):
            shortest_path_metric([[0, 1], [2, 0]])
