"""Tests for per-instance checks, lemma verifiers and report models."""

import json

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from metric_lines.core.errors import InputError, NotDistanceHereditaryError
from metric_lines.core.graph import all_pairs_distances
from metric_lines.hereditary.construction import complete_multipartite
from metric_lines.lab.checks import (
    check_chen_chvatal,
    check_graph,
    check_main_theorem,
    multipartite_line_count,
    verify_lemma_triangle,
    verify_lemma_xaxb,
    verify_twin_lifting,
)
from metric_lines.lab.models import (
    CorpusSpec,
    ScalingRow,
    SizeRecord,
    SweepReport,
    Verdict,
    scaling_csv,
)
from metric_lines.metric.lines import all_lines
from metric_lines.metric.space import FiniteMetric
from tests.strategies import dh_graphs, trees


class TestCheckChenChvatal:
    def test_complete(self, k4):
        v = check_chen_chvatal(all_pairs_distances(k4))
        assert (v.distinct_lines, v.has_universal, v.satisfies) == (6, False, True)

    def test_path(self, p3):
        v = check_chen_chvatal(all_pairs_distances(p3))
        assert v.has_universal and v.satisfies

    def test_four_cycle(self, c4):
        v = check_chen_chvatal(all_pairs_distances(c4))
        assert v.distinct_lines == 1
        assert v.satisfies

    def test_graph_metric_matches(self, c5):
        by_graph = check_graph(c5, "c5")
        by_metric = check_chen_chvatal(all_pairs_distances(c5), "c5")
        assert by_graph.model_dump(exclude={"witness"}) == by_metric.model_dump(exclude={"witness"})


class TestMainTheorem:
    def test_triangle_is_tight(self, k3):
        v = check_main_theorem(k3)
        assert (v.distinct_lines, v.n, v.satisfies) == (3, 3, True)

    def test_star(self, star):
        v = check_main_theorem(star)
        assert v.distinct_lines == 4
        assert v.has_universal

    def test_multipartite(self):
        v = check_main_theorem(complete_multipartite([3, 3, 3]))
        assert v.distinct_lines == 12
        assert not v.has_universal
        assert v.satisfies

    def test_rejects_non_dh(self, c5):
        with pytest.raises(NotDistanceHereditaryError, match="not distance-hereditary"):
            check_main_theorem(c5)


class TestLemmas:
    @pytest.mark.parametrize("name", ["c4", "k4", "p3", "k3", "star"])
    def test_named_graphs(self, name, request):
        g = request.getfixturevalue(name)
        assert verify_lemma_triangle(g) == (True, None)
        assert verify_lemma_xaxb(g) == (True, None)
        assert verify_twin_lifting(g) == (True, None)

    @given(trees())
    def test_trees(self, g):
        assert verify_lemma_triangle(g)[0]

    def test_non_dh_rejected(self, c5):
        for check in (verify_lemma_triangle, verify_lemma_xaxb, verify_twin_lifting):
            with pytest.raises(NotDistanceHereditaryError):
                check(c5)

    @settings(max_examples=200)
    @given(dh_graphs(max_n=12))
    def test_random_dh(self, g):
        assert verify_lemma_triangle(g)[0]
        assert verify_lemma_xaxb(g, recognized=True)[0]
        assert verify_twin_lifting(g, recognized=True)[0]


class TestMultipartiteLineCount:
    @pytest.mark.parametrize("parts,size", [(3, 3), (9, 3), (4, 4), (2, 5), (5, 1)])
    def test_matches_brute_force(self, parts, size):
        g = complete_multipartite([size] * parts)
        assert all_lines(all_pairs_distances(g)).distinct_lines == multipartite_line_count(parts, size)

    def test_values(self):
        assert multipartite_line_count(9, 3) == 63
        assert multipartite_line_count(16, 4) == 216

    def test_size_two_excluded(self):
        with pytest.raises(InputError, match="size 2"):
            multipartite_line_count(4, 2)


class TestModels:
    def test_verdict_rejects_inconsistent_predicate(self):
        with pytest.raises(ValidationError):
            Verdict(instance="x", n=4, distinct_lines=2, has_universal=False, satisfies=True)

    def test_report_json_omits_duration(self):
        report = SweepReport(corpus=CorpusSpec.exhaustive(3), family="all", duration_seconds=1.5)
        assert "duration_seconds" not in json.loads(report.to_json())
        assert json.loads(report.to_json(timing=True))["duration_seconds"] == 1.5

    def test_report_csv(self):
        report = SweepReport(
            corpus=CorpusSpec.exhaustive(3),
            family="dh",
            records=[SizeRecord(n=2, instances=1), SizeRecord(n=3, instances=2, min_lines_non_universal=3)],
        )
        assert report.to_csv() == (
            "n,instances,min_lines_non_universal,violations\n2,1,,0\n3,2,3,0\n"
        )
        assert report.ok
        assert report.record_for(3).min_lines_non_universal == 3
        assert report.record_for(9) is None

    def test_scaling_csv(self):
        row = ScalingRow(
            side=3, n=27, distinct_lines=63, n_4_3=81.0, ratio=63 / 81, closed_form=63, has_universal=False
        )
        assert scaling_csv([row]) == "side,n,distinct_lines,n_4_3,ratio\n3,27,63,81.0,0.777778\n"
        assert row.matches_closed_form

    def test_two_points(self):
        m = FiniteMetric(((0, 1), (1, 0)))
        v = check_chen_chvatal(m)
        assert v.satisfies and v.witness is None
