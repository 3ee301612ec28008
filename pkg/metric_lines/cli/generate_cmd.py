"""Graph generation commands."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from metric_lines.cli.output import emit, input_errors, parse_int_list, parse_weights, read_source
from metric_lines.config.settings import Settings
from metric_lines.core.graph import Graph
from metric_lines.formats.writers import format_edge_list, format_graph6
from metric_lines.hereditary.construction import (
    ConstructionSequence,
    build_from_sequence,
    complete_multipartite,
    format_sequence,
    parse_sequence,
    random_sequence,
)
from metric_lines.hereditary.recognition import recognize_pruning

generate_app = typer.Typer(name="generate", help="Generate distance-hereditary graphs")


class GraphOutput(str, Enum):
    edgelist = "edgelist"
    graph6 = "graph6"
    dhseq = "dh-seq"


def _emit_graph(g: Graph, output: GraphOutput, seq: Optional[ConstructionSequence] = None) -> None:
    if output == GraphOutput.graph6:
        emit(format_graph6(g))
    elif output == GraphOutput.dhseq:
        if seq is None:
            found = recognize_pruning(g)
            assert isinstance(found, ConstructionSequence), "generated graph is not DH"
            seq = found
        emit(format_sequence(seq))
    else:
        emit(format_edge_list(g))


@generate_app.command("random")
def random_graph(
    n: int = typer.Argument(..., help="Number of vertices"),
    seed: Optional[int] = typer.Option(None, help="Seed (default: settings random_seed)"),
    weights: Optional[str] = typer.Option(None, help="Step weights 'P,F,T'"),
    output: GraphOutput = typer.Option(GraphOutput.edgelist, help="edgelist, graph6 or dh-seq"),
) -> None:
    """A seeded random distance-hereditary graph."""
    settings = Settings.load_yaml()
    with input_errors():
        step_weights = settings.step_weights if weights is None else parse_weights(weights)
        seq = random_sequence(n, settings.random_seed if seed is None else seed, step_weights)
        g = build_from_sequence(seq)
    _emit_graph(g, output, seq)


@generate_app.command()
def multipartite(
    sizes: str = typer.Argument(..., help="Part sizes, e.g. '3,3,3'"),
    output: GraphOutput = typer.Option(GraphOutput.edgelist, help="edgelist, graph6 or dh-seq"),
) -> None:
    """The complete multipartite graph with the given part sizes."""
    with input_errors():
        g = complete_multipartite(parse_int_list(sizes, "part sizes"))
    _emit_graph(g, output)


@generate_app.command()
def replay(
    source: Optional[Path] = typer.Argument(None, help="dh-seq file (stdin when omitted)"),
    output: GraphOutput = typer.Option(GraphOutput.edgelist, help="edgelist or graph6"),
    original: bool = typer.Option(False, help="Relabel through the '# origin' line"),
) -> None:
    """Build the graph a construction sequence describes."""
    with input_errors():
        seq = parse_sequence(read_source(source))
        g = build_from_sequence(seq)
        if original and seq.origin:
            g = g.relabel(seq.origin)
    _emit_graph(g, output, None if original else seq)
