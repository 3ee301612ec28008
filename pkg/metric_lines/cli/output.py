"""Shared CLI plumbing: exit codes, input sources, output modes."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.markup import escape

from metric_lines.core.errors import FormatError, InputError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_INTERNAL = 3

console = Console()
err_console = Console(stderr=True)


class OutputMode(str, Enum):
    pretty = "pretty"
    json = "json"
    csv = "csv"


class InstanceOutput(str, Enum):
    pretty = "pretty"
    json = "json"


class InputFormatOption(str, Enum):
    edgelist = "edgelist"
    graph6 = "graph6"
    metric = "metric"


def read_source(source: Optional[Path]) -> str:
    """File contents, or stdin when no path (or '-') is given."""
    if source is None or str(source) == "-":
        return typer.get_text_stream("stdin").read()
    try:
        return source.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from exc


def emit(text: str) -> None:
    """Machine-readable output, written byte-for-byte."""
    typer.echo(text, nl=not text.endswith("\n"))


@contextmanager
def input_errors() -> Iterator[None]:
    """Turn input and format errors into a diagnostic on stderr and exit code 1."""
    try:
        yield
    except FormatError as exc:
        err_console.print(f"[red]format error:[/red] {escape(str(exc))}")
        raise typer.Exit(EXIT_INPUT) from exc
    except InputError as exc:
        err_console.print(f"[red]input error:[/red] {escape(str(exc))}")
        raise typer.Exit(EXIT_INPUT) from exc


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from exc


def parse_weights(text: str) -> tuple[float, float, float]:
    try:
        values = tuple(float(tok) for tok in text.split(","))
    except ValueError as exc:
        raise InputError(f"weights must be 'P,F,T' numbers, got {text!r}") from exc
    if len(values) != 3 or any(w < 0 for w in values) or not any(values):
        raise InputError(f"weights must be three non-negative numbers, not all zero: {text!r}")
    return values  # type: ignore[return-value]
