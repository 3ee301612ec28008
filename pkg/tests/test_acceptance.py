"""Desk-scale exhaustive runs. Slow: run with ``pytest -m slow``."""

import os

import pytest

from metric_lines.core.graph import is_two_connected
from metric_lines.hereditary.properties import find_disjoint_twin_pairs, verify_dh1_crossing_chords
from metric_lines.hereditary.recognition import is_distance_hereditary, recognize_bruteforce
from metric_lines.lab.enumeration import enumerate_graph_classes
from metric_lines.lab.models import CorpusSpec
from metric_lines.lab.sweeps import (
    scaling_experiment,
    sweep_conjecture,
    sweep_theorem,
    sweep_two_metric,
)

pytestmark = pytest.mark.slow

JOBS = os.cpu_count() or 1


def test_every_connected_graph_to_seven():
    report = sweep_conjecture(CorpusSpec.exhaustive(7), lemmas=True, jobs=JOBS)
    assert report.checked == 1 + 4 + 38 + 728 + 26704 + 1866256
    assert report.violations == []
    assert report.lemma_failures == []


def test_every_dh_graph_to_seven():
    report = sweep_theorem(7, jobs=JOBS)
    assert report.ok
    assert report.record_for(3).min_lines_non_universal == 3


def test_random_dh_graphs_with_lemmas():
    report = sweep_theorem(30, CorpusSpec.random(count=10_000, seed=0), lemmas=True, jobs=JOBS)
    assert report.checked == 10_000
    assert report.ok


@pytest.mark.parametrize("n", [6, 7])
def test_recognizers_agree(n):
    for g in enumerate_graph_classes(n):
        assert recognize_bruteforce(g)[0] == is_distance_hereditary(g)


def test_crossing_chords_characterize_dh_to_eight():
    disagreements = [
        g for g in enumerate_graph_classes(8) if verify_dh1_crossing_chords(g)[0] != is_distance_hereditary(g)
    ]
    assert disagreements == []


@pytest.mark.parametrize("n", [7, 8])
def test_two_connected_dh_classes_have_twin_pairs(n):
    lacking = [
        g
        for g in enumerate_graph_classes(n)
        if is_two_connected(g) and is_distance_hereditary(g) and find_disjoint_twin_pairs(g) is None
    ]
    assert lacking == []


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_two_metric_spaces(n):
    report = sweep_two_metric(n, jobs=JOBS)
    assert report.checked == 2 ** (n * (n - 1) // 2)
    assert report.ok


def test_scaling_two_oracles():
    rows = scaling_experiment([3, 4, 5])
    assert [r.n for r in rows] == [27, 64, 125]
    assert all(r.matches_closed_form for r in rows)
    assert all(r.ratio > 0.5 for r in rows)


def test_reports_are_reproducible():
    corpus = CorpusSpec.random(count=2_000, seed=0)
    first = sweep_conjecture(corpus, family="dh", jobs=JOBS)
    second = sweep_conjecture(corpus, family="dh", jobs=1)
    assert first.to_json() == second.to_json()
    assert first.to_csv() == second.to_csv()


def test_every_graph_class_to_eight():
    report = sweep_conjecture(CorpusSpec.exhaustive(8, canonical=True), jobs=JOBS)
    assert report.checked == 1 + 2 + 6 + 21 + 112 + 853 + 11117
    assert report.ok
