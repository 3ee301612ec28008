"""Text readers for edge lists, distance matrices and graph6, with format detection."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable
from fractions import Fraction
from typing import Literal, Optional, Union

import networkx as nx

from metric_lines.core.errors import FormatError, InputError
from metric_lines.core.graph import Graph, from_edge_list, from_networkx
from metric_lines.metric.space import FiniteMetric, integralize_rational, validate_metric

logger = logging.getLogger(__name__)

InputFormat = Literal["edgelist", "graph6", "metric"]

_TOKEN_RE = re.compile(r"\S+")
_GRAPH6_RE = re.compile(r"^(>>graph6<<)?[?-~]+$")


class _Row:
    __slots__ = ("lineno", "tokens")

    def __init__(self, lineno: int, tokens: list[tuple[int, str]]) -> None:
        self.lineno = lineno
        self.tokens = tokens


def _rows(text: str) -> list[_Row]:
    """Non-empty lines with '#' comments stripped; tokens carry 1-based columns."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN_RE.finditer(body)]
        if tokens:
            rows.append(_Row(lineno, tokens))
    return rows


def _int(row: _Row, i: int, what: str) -> int:
    col, tok = row.tokens[i]
    try:
        return int(tok)
    except ValueError as exc:
        raise FormatError(f"{what} must be an integer, got {tok!r}", row.lineno, col) from exc


def _number(row: _Row, i: int) -> Union[int, Fraction]:
    col, tok = row.tokens[i]
    try:
        value = Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"distance must be an integer or p/q, got {tok!r}", row.lineno, col) from exc
    if "." in tok or "e" in tok.lower():
        raise FormatError(f"distances are exact: write {tok!r} as p/q", row.lineno, col)
    return int(value) if value.denominator == 1 else value


def parse_edge_list(text: str) -> Graph:
    """'n m' header then m lines 'u v' with 0-based endpoints."""
    rows = _rows(text)
    if not rows:
        raise FormatError("empty edge list", 1, 1)
    header = rows[0]
    if len(header.tokens) != 2:
        raise FormatError("expected header 'n m'", header.lineno, 1)
    n = _int(header, 0, "vertex count")
    m = _int(header, 1, "edge count")
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}", header.lineno, header.tokens[1][0])
    edges = []
    for row in body:
        if len(row.tokens) != 2:
            raise FormatError("expected an edge 'u v'", row.lineno, row.tokens[0][0])
        u, v = _int(row, 0, "endpoint"), _int(row, 1, "endpoint")
        for i, w in enumerate((u, v)):
            if not 0 <= w < n:
                raise FormatError(f"vertex {w} out of range [0, {n})", row.lineno, row.tokens[i][0])
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", row.lineno, row.tokens[0][0])
        edges.append((u, v))
    try:
        return from_edge_list(n, edges)
    except InputError as exc:
        raise FormatError(str(exc), header.lineno, 1) from exc


def parse_metric_matrix(text: str) -> list[list[Union[int, Fraction]]]:
    """'n' header then n rows of n entries (integers or 'p/q')."""
    rows = _rows(text)
    if not rows:
        raise FormatError("empty metric", 1, 1)
    header = rows[0]
    if len(header.tokens) != 1:
        raise FormatError("expected header 'n'", header.lineno, 1)
    n = _int(header, 0, "point count")
    body = rows[1:]
    if len(body) != n:
        raise FormatError(f"header announces {n} rows, found {len(body)}", header.lineno, 1)
    matrix = []
    for row in body:
        if len(row.tokens) != n:
            raise FormatError(f"expected {n} entries, found {len(row.tokens)}", row.lineno, row.tokens[0][0])
        matrix.append([_number(row, i) for i in range(n)])
    return matrix


def parse_metric(text: str) -> FiniteMetric:
    """Validated metric; rational input is scaled to integers with the same lines."""
    matrix = parse_metric_matrix(text)
    if all(isinstance(x, int) for row in matrix for x in row):
        return validate_metric(matrix)
    logger.info("rational distances: scaling to an integral metric")
    return integralize_rational(matrix)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    graphs = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            graphs.append(from_networkx(nx.from_graph6_bytes(text.encode("ascii"))))
        except (nx.NetworkXError, UnicodeEncodeError, ValueError) as exc:
            raise FormatError(f"invalid graph6 string: {exc}", lineno, 1) from exc
    return graphs


def parse_graph6(text: str) -> Graph:
    graphs = read_graph6_lines(text.splitlines())
    if len(graphs) != 1:
        raise FormatError(f"expected one graph6 string, found {len(graphs)}", 1, 1)
    return graphs[0]


def detect_format(text: str) -> InputFormat:
    """Edge list for an 'n m' header, metric for a lone 'n', graph6 by character range."""
    rows = _rows(text)
    if not rows:
        raise FormatError("empty input", 1, 1)
    header = rows[0]
    first = header.tokens[0][1]
    if len(header.tokens) == 1 and _GRAPH6_RE.match(first) and not first.isdigit():
        return "graph6"
    if len(header.tokens) == 1:
        return "metric"
    if len(header.tokens) == 2:
        body = rows[1:]
        if first.isdigit() and len(body) == int(first) and all(
            len(r.tokens) == int(first) for r in body
        ):
            logger.warning("input reads as both an edge list and a matrix; treating it as an edge list")
        return "edgelist"
    raise FormatError("cannot tell the input format from its first line", header.lineno, 1)


def read_instance(text: str, fmt: Optional[InputFormat] = None) -> Union[Graph, FiniteMetric]:
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    return parse_metric(text)


def read_graph(text: str, fmt: Optional[InputFormat] = None) -> Graph:
    instance = read_instance(text, fmt)
    if not isinstance(instance, Graph):
        raise InputError("this command needs a graph (edge list or graph6), not a metric")
    return instance
