"""Per-instance commands: lines, check, recognize, lemmas."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

import typer
from rich.table import Table

from metric_lines.cli.output import (
    EXIT_VIOLATION,
    InputFormatOption,
    InstanceOutput,
    console,
    emit,
    input_errors,
    read_source,
)
from metric_lines.config.settings import Settings
from metric_lines.core.graph import Graph, all_pairs_distances
from metric_lines.formats.readers import read_graph, read_instance
from metric_lines.hereditary.construction import format_sequence
from metric_lines.hereditary.properties import (
    find_disjoint_twin_pairs,
    verify_dh1_crossing_chords,
    verify_dh2_level_neighborhoods,
)
from metric_lines.hereditary.recognition import NotDH, recognize_bruteforce, recognize_pruning
from metric_lines.lab.checks import (
    check_chen_chvatal,
    check_graph,
    verify_lemma_triangle,
    verify_lemma_xaxb,
    verify_twin_lifting,
)
from metric_lines.metric.lines import all_lines

SourceArg = typer.Argument(None, help="Input file (stdin when omitted)")
FormatOpt = typer.Option(None, "--format", help="Input format (auto-detected when omitted)")


def lines(
    source: Optional[Path] = SourceArg,
    fmt: Optional[InputFormatOption] = FormatOpt,
    output: InstanceOutput = typer.Option(InstanceOutput.json, help="pretty or json"),
) -> None:
    """Compute every distinct line of a graph metric or a distance matrix."""
    with input_errors():
        instance = read_instance(read_source(source), fmt.value if fmt else None)
        metric = all_pairs_distances(instance) if isinstance(instance, Graph) else instance
        line_set = all_lines(metric)

    if output == InstanceOutput.pretty:
        table = Table(title=f"{line_set.distinct_lines} distinct lines on {line_set.n} points")
        table.add_column("#", style="dim")
        table.add_column("Members")
        table.add_column("Universal")
        for i, members in enumerate(line_set.lines):
            table.add_row(str(i), " ".join(map(str, members)), "yes" if len(members) == line_set.n else "")
        console.print(table)
    else:
        emit(line_set.to_json())


def check(
    source: Optional[Path] = SourceArg,
    fmt: Optional[InputFormatOption] = FormatOpt,
    output: InstanceOutput = typer.Option(InstanceOutput.json, help="pretty or json"),
) -> None:
    """Test "at least n distinct lines or a universal line" on one graph or metric."""
    with input_errors():
        instance = read_instance(read_source(source), fmt.value if fmt else None)
        if isinstance(instance, Graph):
            verdict = check_graph(instance, instance="input")
        else:
            verdict = check_chen_chvatal(instance, instance="input")

    if output == InstanceOutput.pretty:
        colour = "green" if verdict.satisfies else "red"
        console.print(
            f"[{colour}]{'holds' if verdict.satisfies else 'VIOLATED'}[/{colour}]: "
            f"{verdict.distinct_lines} distinct lines on {verdict.n} points, "
            f"universal line: {'yes' if verdict.has_universal else 'no'}"
        )
    else:
        emit(verdict.model_dump_json(indent=2) + "\n")
    if not verdict.satisfies:
        raise typer.Exit(EXIT_VIOLATION)


def _structural_properties(g: Graph, cycle_max_n: int) -> dict[str, Any]:
    chords_ok, cycle = verify_dh1_crossing_chords(g, cycle_max_n)
    levels_ok, level_witness = verify_dh2_level_neighborhoods(g)
    twins = find_disjoint_twin_pairs(g)
    return {
        "crossing_chords": {"holds": chords_ok, "cycle": None if cycle is None else list(cycle)},
        "level_neighborhoods": {
            "holds": levels_ok,
            "witness": None if level_witness is None else level_witness._asdict(),
        },
        "disjoint_twin_pairs": None if twins is None else [list(pair) for pair in twins],
    }


def recognize(
    source: Optional[Path] = SourceArg,
    fmt: Optional[InputFormatOption] = FormatOpt,
    output: InstanceOutput = typer.Option(InstanceOutput.pretty, help="pretty (dh-seq text) or json"),
    bruteforce: bool = typer.Option(False, help="Also run the definitional check"),
    properties: bool = typer.Option(
        False, help="Add crossing-chord, level and twin-pair checks to json output"
    ),
) -> None:
    """Recognize a distance-hereditary graph, printing its construction sequence."""
    settings = Settings.load_yaml()
    with input_errors():
        g = read_graph(read_source(source), fmt.value if fmt else None)
        result = recognize_pruning(g)
        oracle = recognize_bruteforce(g, settings.bruteforce_max_n) if bruteforce else None
        structure = _structural_properties(g, settings.cycle_max_n) if properties else None

    payload: dict[str, Any]
    if isinstance(result, NotDH):
        payload = {
            "distance_hereditary": False,
            "residual_vertices": list(result.vertices),
            "residual_edges": [[result.vertices[u], result.vertices[v]] for u, v in result.residual.edges()],
        }
    else:
        payload = {
            "distance_hereditary": True,
            "origin": list(result.origin),
            "steps": [[s.kind, s.new_vertex, s.anchor] for s in result.steps],
        }
    if oracle is not None:
        holds, witness = oracle
        payload["bruteforce"] = {
            "distance_hereditary": holds,
            "witness": None
            if witness is None
            else {
                "subset": list(witness.subset),
                "x": witness.x,
                "y": witness.y,
                "subgraph_distance": witness.subgraph_distance,
                "graph_distance": witness.graph_distance,
            },
        }
    if structure is not None:
        payload["properties"] = structure

    if output == InstanceOutput.json:
        emit(json.dumps(payload, indent=2) + "\n")
    elif isinstance(result, NotDH):
        console.print(
            f"[red]not distance-hereditary[/red]: no pendant vertex or twins among "
            f"{list(result.vertices)}"
        )
        for u, v in payload["residual_edges"]:
            console.print(f"  {u} {v}")
    else:
        emit(format_sequence(result))
    if isinstance(result, NotDH):
        raise typer.Exit(EXIT_VIOLATION)


def lemmas(
    source: Optional[Path] = SourceArg,
    fmt: Optional[InputFormatOption] = FormatOpt,
    output: InstanceOutput = typer.Option(InstanceOutput.json, help="pretty or json"),
) -> None:
    """Check the edge-triangle, equal-lines and twin-lifting lemmas on a DH graph."""
    with input_errors():
        g = read_graph(read_source(source), fmt.value if fmt else None)
        results = {
            "triangle": verify_lemma_triangle(g),
            "xaxb": verify_lemma_xaxb(g, recognized=True),
            "twin_lifting": verify_twin_lifting(g, recognized=True),
        }

    report = {
        name: {"holds": holds, "witness": None if witness is None else list(witness)}
        for name, (holds, witness) in results.items()
    }
    if output == InstanceOutput.pretty:
        for name, entry in report.items():
            mark = "[green]holds[/green]" if entry["holds"] else f"[red]fails[/red] at {entry['witness']}"
            console.print(f"  [bold]{name}[/bold] {mark}")
    else:
        emit(json.dumps(report, indent=2) + "\n")
    if not all(entry["holds"] for entry in report.values()):
        raise typer.Exit(EXIT_VIOLATION)
