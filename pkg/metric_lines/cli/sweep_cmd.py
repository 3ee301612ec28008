"""Corpus commands: sweep, two-metric, scaling."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from rich.panel import Panel
from rich.table import Table

from metric_lines.cli.output import (
    EXIT_VIOLATION,
    OutputMode,
    console,
    emit,
    input_errors,
    parse_int_list,
    parse_weights,
)
from metric_lines.config.settings import Settings
from metric_lines.core.errors import InputError
from metric_lines.lab.models import CorpusSpec, SweepReport, scaling_csv, scaling_json
from metric_lines.lab.sweeps import scaling_experiment, sweep_conjecture, sweep_two_metric


class FamilyOption(str, Enum):
    all = "all"
    dh = "dh"
    chordal = "chordal"


def _show_report(report: SweepReport, output: OutputMode, timing: bool) -> None:
    if output == OutputMode.json:
        emit(report.to_json(timing=timing) + "\n")
        return
    if output == OutputMode.csv:
        emit(report.to_csv())
        return

    table = Table(title=f"{report.corpus.kind} corpus, family {report.family}")
    table.add_column("n", justify="right")
    table.add_column("Instances", justify="right")
    table.add_column("Min lines (no universal)", justify="right")
    table.add_column("Violations", justify="right")
    for r in report.records:
        low = "-" if r.min_lines_non_universal is None else str(r.min_lines_non_universal)
        table.add_row(str(r.n), str(r.instances), low, str(r.violations))
    console.print(table)

    colour = "green" if report.ok else "red"
    summary = (
        f"[{colour}]{report.checked} checked, {len(report.violations)} violations, "
        f"{len(report.lemma_failures)} lemma failures[/{colour}]"
    )
    if report.duration_seconds is not None:
        summary += f"\n[dim]{report.duration_seconds:.3f}s[/dim]"
    for v in report.violations[:10]:
        summary += f"\n  {v.instance}: {v.distinct_lines} lines on {v.n} points"
    for f in report.lemma_failures[:10]:
        summary += f"\n  {f.instance}: {f.lemma} fails at {f.witness}"
    console.print(Panel.fit(summary, title="Sweep"))


def sweep(
    exhaustive: bool = typer.Option(False, "--exhaustive", help="Every connected labeled graph"),
    random_corpus: bool = typer.Option(False, "--random", help="Seeded random DH graphs"),
    corpus_file: Optional[Path] = typer.Option(None, "--corpus-file", help="graph6 file, one graph per line"),
    n_max: Optional[int] = typer.Option(None, "--n-max", help="Largest graph size"),
    count: Optional[int] = typer.Option(None, help="Random corpus size"),
    seed: Optional[int] = typer.Option(None, help="Random corpus seed"),
    weights: Optional[str] = typer.Option(None, help="Step weights 'P,F,T'"),
    canonical: bool = typer.Option(False, help="One graph per isomorphism class"),
    family: FamilyOption = typer.Option(FamilyOption.all, help="all, dh or chordal"),
    lemmas: bool = typer.Option(False, help="Also check the lemmas on DH instances"),
    jobs: Optional[int] = typer.Option(None, help="Worker processes"),
    output: OutputMode = typer.Option(OutputMode.json, help="pretty, json or csv"),
    timing: bool = typer.Option(False, help="Include wall-clock duration in JSON"),
) -> None:
    """Check "n lines or a universal line" over a corpus of graphs."""
    settings = Settings.load_yaml()
    with input_errors():
        if sum((exhaustive, random_corpus, corpus_file is not None)) != 1:
            raise InputError("choose exactly one of --exhaustive, --random, --corpus-file")
        if exhaustive:
            n = settings.exhaustive_max_n if n_max is None else n_max
            corpus = CorpusSpec.exhaustive(n, canonical=canonical)
        elif random_corpus:
            corpus = CorpusSpec.random(
                count=settings.random_count if count is None else count,
                seed=settings.random_seed if seed is None else seed,
                n_min=settings.random_n_min,
                n_max=settings.random_n_max if n_max is None else n_max,
                weights=settings.step_weights if weights is None else parse_weights(weights),
            )
        else:
            corpus = CorpusSpec.from_file(str(corpus_file))
        report = sweep_conjecture(
            corpus,
            family=family.value,
            lemmas=lemmas,
            jobs=settings.jobs if jobs is None else jobs,
            exhaustive_max_n=settings.exhaustive_max_n,
            classes_max_n=settings.classes_max_n,
        )
    _show_report(report, output, timing)
    if not report.ok:
        raise typer.Exit(EXIT_VIOLATION)


def two_metric(
    n: int = typer.Argument(..., help="Number of points"),
    jobs: Optional[int] = typer.Option(None, help="Worker processes"),
    output: OutputMode = typer.Option(OutputMode.json, help="pretty, json or csv"),
    timing: bool = typer.Option(False, help="Include wall-clock duration in JSON"),
) -> None:
    """Every metric on n points with distances in {1, 2}."""
    settings = Settings.load_yaml()
    with input_errors():
        workers = settings.jobs if jobs is None else jobs
        report = sweep_two_metric(n, jobs=workers, max_n=settings.two_metric_max_n)
    _show_report(report, output, timing)
    if not report.ok:
        raise typer.Exit(EXIT_VIOLATION)


def scaling(
    sides: str = typer.Option("3,4", help="Cube sides s (n = s^3), comma-separated"),
    output: OutputMode = typer.Option(OutputMode.csv, help="csv, json or pretty"),
) -> None:
    """Line counts of complete multipartite graphs against n^(4/3)."""
    with input_errors():
        rows = scaling_experiment(parse_int_list(sides, "sides"))

    if output == OutputMode.csv:
        emit(scaling_csv(rows))
    elif output == OutputMode.json:
        emit(scaling_json(rows) + "\n")
    else:
        table = Table(title="Complete multipartite scaling")
        for col in ("side", "n", "lines", "n^(4/3)", "ratio", "closed form"):
            table.add_column(col, justify="right")
        for row in rows:
            table.add_row(
                str(row.side),
                str(row.n),
                str(row.distinct_lines),
                f"{row.n_4_3:.1f}",
                f"{row.ratio:.6f}",
                str(row.closed_form),
            )
        console.print(table)
    if not all(row.matches_closed_form for row in rows):
        raise typer.Exit(EXIT_VIOLATION)
