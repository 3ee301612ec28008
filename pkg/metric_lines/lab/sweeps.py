"""Corpus sweeps: conjecture/theorem checks, the 2-metric grid, the scaling experiment.

Sweeps cut their corpus into chunks that workers process independently; each
chunk returns a :class:`Tally`, and tallies merge associatively in chunk order,
so reports do not depend on the number of workers.
"""

from __future__ import annotations

import logging
import multiprocessing
import random
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, TypeVar

from metric_lines.core.errors import InputError
from metric_lines.core.graph import Graph, all_pairs_distances, is_chordal, is_connected
from metric_lines.formats.readers import read_graph6_lines
from metric_lines.hereditary.construction import complete_multipartite, random_dh
from metric_lines.hereditary.recognition import is_distance_hereditary
from metric_lines.lab.checks import (
    check_chen_chvatal,
    check_graph,
    multipartite_line_count,
    verify_lemma_triangle,
    verify_lemma_xaxb,
    verify_twin_lifting,
)
from metric_lines.lab.enumeration import (
    CLASSES_MAX_N,
    LABELED_MAX_N,
    connected_graphs_in_range,
    edge_pairs,
    enumerate_graph_classes,
    graph_from_mask,
    graph_mask,
    mask_count,
)
from metric_lines.lab.models import (
    CorpusSpec,
    Family,
    LemmaFailure,
    ScalingRow,
    SizeRecord,
    SweepReport,
    Verdict,
)
from metric_lines.metric.lines import all_lines
from metric_lines.metric.space import FiniteMetric

logger = logging.getLogger(__name__)

TWO_METRIC_MAX_N = 6
EXHAUSTIVE_CHUNK = 1 << 14
RANDOM_CHUNK = 250
METRIC_CHUNK = 1 << 12

T = TypeVar("T")


@dataclass
class Tally:
    """Partial sweep result; ``merge`` is associative."""

    checked: int = 0
    records: dict[int, SizeRecord] = field(default_factory=dict)
    violations: list[Verdict] = field(default_factory=list)
    lemma_failures: list[LemmaFailure] = field(default_factory=list)

    def add(self, verdict: Verdict) -> None:
        self.checked += 1
        rec = self.records.setdefault(verdict.n, SizeRecord(n=verdict.n))
        rec.instances += 1
        if not verdict.has_universal and (
            rec.min_lines_non_universal is None
            or verdict.distinct_lines < rec.min_lines_non_universal
        ):
            rec.min_lines_non_universal = verdict.distinct_lines
        if not verdict.satisfies:
            rec.violations += 1
            self.violations.append(verdict)

    def merge(self, other: Tally) -> Tally:
        self.checked += other.checked
        for n, theirs in other.records.items():
            mine = self.records.get(n)
            if mine is None:
                self.records[n] = theirs.model_copy()
                continue
            mine.instances += theirs.instances
            mine.violations += theirs.violations
            lows = [
                x
                for x in (mine.min_lines_non_universal, theirs.min_lines_non_universal)
                if x is not None
            ]
            mine.min_lines_non_universal = min(lows) if lows else None
        self.violations.extend(other.violations)
        self.lemma_failures.extend(other.lemma_failures)
        return self

    def report(self, corpus: CorpusSpec, family: str, duration: float) -> SweepReport:
        return SweepReport(
            corpus=corpus,
            family=family,
            checked=self.checked,
            violations=self.violations,
            records=[self.records[n] for n in sorted(self.records)],
            lemma_failures=self.lemma_failures,
            duration_seconds=round(duration, 3),
        )


def _run_chunks(
    worker: Callable[[Any], Tally], tasks: Sequence[Any], jobs: int
) -> Tally:
    """Map ``worker`` over ``tasks`` (in a process pool when jobs > 1), merging in order."""
    if jobs < 1:
        raise InputError(f"jobs must be >= 1, got {jobs}")
    total = Tally()
    if jobs <= 1 or len(tasks) <= 1:
        results: Iterable[Tally] = map(worker, tasks)
    else:
        pool = multiprocessing.Pool(processes=min(jobs, len(tasks)))
        try:
            results = list(pool.imap(worker, tasks))
        finally:
            pool.close()
            pool.join()
    for i, part in enumerate(results, start=1):
        total.merge(part)
        logger.debug("chunk %d/%d merged (%d checked)", i, len(tasks), total.checked)
    return total


# ── graph corpora ───────────────────────────────────────────────────────


def _in_family(g: Graph, family: Family) -> bool:
    if family == "dh":
        return is_distance_hereditary(g)
    if family == "chordal":
        return is_chordal(g)
    return True


def _check_one(tally: Tally, g: Graph, instance: str, family: Family, lemmas: bool) -> None:
    if g.n < 2 or not _in_family(g, family):
        return
    tally.add(check_graph(g, instance))
    if not lemmas or (family != "dh" and not is_distance_hereditary(g)):
        return
    checks: tuple[tuple[str, Callable[..., tuple[bool, Optional[Sequence[int]]]]], ...] = (
        ("triangle", verify_lemma_triangle),
        ("xaxb", verify_lemma_xaxb),
        ("twin_lifting", verify_twin_lifting),
    )
    for name, check in checks:
        ok, witness = check(g, recognized=True)
        if not ok:
            logger.error("lemma %s fails on %s: %s", name, instance, witness)
            tally.lemma_failures.append(
                LemmaFailure(instance=instance, lemma=name, witness=list(witness or ()))
            )


def _exhaustive_chunk(task: tuple[int, int, int, Family, bool]) -> Tally:
    n, start, stop, family, lemmas = task
    tally = Tally()
    for mask, g in connected_graphs_in_range(n, start, stop):
        _check_one(tally, g, f"labeled:n={n}:mask={mask}", family, lemmas)
    return tally


def _class_chunk(task: tuple[list[tuple[int, int]], Family, bool]) -> Tally:
    items, family, lemmas = task
    tally = Tally()
    for n, mask in items:
        _check_one(tally, graph_from_mask(n, mask), f"class:n={n}:mask={mask}", family, lemmas)
    return tally


def _random_chunk(
    task: tuple[list[tuple[int, int, int]], tuple[float, float, float], Family, bool],
) -> Tally:
    items, weights, family, lemmas = task
    tally = Tally()
    for index, n, seed in items:
        g = random_dh(n, seed, weights)
        _check_one(tally, g, f"random:{index}:n={n}:seed={seed}", family, lemmas)
    return tally


def _file_chunk(task: tuple[list[tuple[int, str]], Family, bool]) -> Tally:
    items, family, lemmas = task
    tally = Tally()
    for lineno, text in items:
        (g,) = read_graph6_lines([text])
        if not is_connected(g):
            logger.debug("skipping disconnected graph on line %d", lineno)
            continue
        _check_one(tally, g, f"file:line={lineno}", family, lemmas)
    return tally


def random_corpus(corpus: CorpusSpec) -> list[tuple[int, int, int]]:
    """(index, n, seed) triples drawn from the corpus seed, independent of workers."""
    if corpus.count < 1:
        raise InputError(f"random corpus needs count >= 1, got {corpus.count}")
    if corpus.n_min < 2 or corpus.n_max < corpus.n_min:
        raise InputError(f"random corpus needs 2 <= n_min <= n_max, got {corpus.n_min}..{corpus.n_max}")
    rng = random.Random(corpus.seed)
    return [(i, rng.randint(corpus.n_min, corpus.n_max), rng.getrandbits(32)) for i in range(corpus.count)]


def _chunked(items: Sequence[T], size: int) -> list[list[T]]:
    return [list(items[i : i + size]) for i in range(0, len(items), size)]


def sweep_conjecture(
    corpus: CorpusSpec,
    family: Family = "all",
    lemmas: bool = False,
    jobs: int = 1,
    exhaustive_max_n: int = LABELED_MAX_N,
    classes_max_n: int = CLASSES_MAX_N,
) -> SweepReport:
    """Check the conjecture predicate on every connected graph of the corpus in ``family``.

    With ``lemmas`` the triangle, equal-lines and twin-lifting checks also run
    on each distance-hereditary instance.
    """
    started = time.perf_counter()
    logger.info("sweep %s family=%s jobs=%d", corpus.kind, family, jobs)
    tasks: list[Any]
    if corpus.kind == "exhaustive" and corpus.canonical:
        if not 2 <= corpus.n_max <= classes_max_n:
            raise InputError(
                f"canonical sweeps need 2 <= n_max <= {classes_max_n}, got {corpus.n_max}"
            )
        classes = [
            (n, graph_mask(g))
            for n in range(2, corpus.n_max + 1)
            for g in enumerate_graph_classes(n, max_n=classes_max_n)
        ]
        tasks = [(chunk, family, lemmas) for chunk in _chunked(classes, RANDOM_CHUNK)]
        tally = _run_chunks(_class_chunk, tasks, jobs)
    elif corpus.kind == "exhaustive":
        if not 2 <= corpus.n_max <= exhaustive_max_n:
            raise InputError(
                f"exhaustive sweeps need 2 <= n_max <= {exhaustive_max_n}, got {corpus.n_max}"
            )
        tasks = [
            (n, lo, min(lo + EXHAUSTIVE_CHUNK, mask_count(n)), family, lemmas)
            for n in range(2, corpus.n_max + 1)
            for lo in range(0, mask_count(n), EXHAUSTIVE_CHUNK)
        ]
        tally = _run_chunks(_exhaustive_chunk, tasks, jobs)
    elif corpus.kind == "random":
        tasks = [
            (chunk, corpus.weights, family, lemmas)
            for chunk in _chunked(random_corpus(corpus), RANDOM_CHUNK)
        ]
        tally = _run_chunks(_random_chunk, tasks, jobs)
    elif corpus.kind == "file":
        if not corpus.path:
            raise InputError("file corpus needs a path")
        try:
            lines = Path(corpus.path).read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise InputError(f"cannot read corpus file {corpus.path}: {exc.strerror}") from exc
        entries = [
            (i, text.strip())
            for i, text in enumerate(lines, start=1)
            if text.strip() and not text.startswith("#")
        ]
        tasks = [(chunk, family, lemmas) for chunk in _chunked(entries, RANDOM_CHUNK)]
        tally = _run_chunks(_file_chunk, tasks, jobs)
    else:
        raise InputError(f"corpus kind {corpus.kind!r} is not a graph corpus")
    report = tally.report(corpus, family, time.perf_counter() - started)
    logger.info(
        "sweep done: %d checked, %d violations, %d lemma failures",
        report.checked,
        len(report.violations),
        len(report.lemma_failures),
    )
    return report


def sweep_theorem(
    n_max: int,
    corpus: Optional[CorpusSpec] = None,
    lemmas: bool = False,
    jobs: int = 1,
) -> SweepReport:
    """The main theorem over the distance-hereditary graphs of a corpus.

    Without ``corpus`` the sweep is exhaustive up to ``n_max``; a random corpus
    draws its sizes up to ``n_max``.
    """
    if corpus is None:
        corpus = CorpusSpec.exhaustive(n_max)
    else:
        corpus = corpus.model_copy(update={"n_max": n_max})
    return sweep_conjecture(corpus, family="dh", lemmas=lemmas, jobs=jobs)


# ── k-metric grid ───────────────────────────────────────────────────────


def two_metric(n: int, mask: int) -> FiniteMetric:
    """Distances 2 on the pairs whose bit is set, 1 elsewhere; always a metric."""
    d = [[0] * n for _ in range(n)]
    for k, (u, v) in enumerate(edge_pairs(n)):
        d[u][v] = d[v][u] = 2 if mask >> k & 1 else 1
    return FiniteMetric(tuple(tuple(row) for row in d))


def _two_metric_chunk(task: tuple[int, int, int]) -> Tally:
    n, start, stop = task
    tally = Tally()
    for mask in range(start, stop):
        tally.add(check_chen_chvatal(two_metric(n, mask), f"2-metric:n={n}:mask={mask}"))
    return tally


def sweep_two_metric(n: int, jobs: int = 1, max_n: int = TWO_METRIC_MAX_N) -> SweepReport:
    """Every assignment of distances {1, 2} on n points."""
    if not 2 <= n <= max_n:
        raise InputError(f"2-metric sweeps need 2 <= n <= {max_n}, got n={n}")
    started = time.perf_counter()
    total = mask_count(n)
    tasks = [(n, lo, min(lo + METRIC_CHUNK, total)) for lo in range(0, total, METRIC_CHUNK)]
    tally = _run_chunks(_two_metric_chunk, tasks, jobs)
    corpus = CorpusSpec(kind="two_metric", n_max=n, n_min=n)
    return tally.report(corpus, "2-metric", time.perf_counter() - started)


# ── scaling experiment ──────────────────────────────────────────────────


def scaling_experiment(cube_sides: Sequence[int]) -> list[ScalingRow]:
    """Line counts of complete multipartite graphs with s*s parts of size s (n = s**3)."""
    rows: list[ScalingRow] = []
    for s in cube_sides:
        if s < 3:
            raise InputError(
                f"side {s}: sides below 3 give universal lines (parts of size 2 are "
                f"false twins seeing every other vertex), use s >= 3"
            )
        g = complete_multipartite([s] * (s * s))
        lines = all_lines(all_pairs_distances(g))
        scale = float(s**4)
        row = ScalingRow(
            side=s,
            n=g.n,
            distinct_lines=lines.distinct_lines,
            n_4_3=scale,
            ratio=lines.distinct_lines / scale,
            closed_form=multipartite_line_count(s * s, s),
            has_universal=lines.has_universal,
        )
        if not row.matches_closed_form:
            logger.error(
                "side %d: brute force found %d lines, pair classification predicts %d",
                s,
                row.distinct_lines,
                row.closed_form,
            )
        logger.info("side %d (n=%d): %d lines, ratio %.4f", s, row.n, row.distinct_lines, row.ratio)
        rows.append(row)
    return rows
