"""Text writers mirroring :mod:`metric_lines.formats.readers`."""

from __future__ import annotations

import networkx as nx

from metric_lines.core.graph import Graph, to_networkx
from metric_lines.metric.space import FiniteMetric


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def format_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii")


def format_metric(m: FiniteMetric) -> str:
    lines = [str(m.n)] + [" ".join(str(x) for x in row) for row in m.d]
    return "\n".join(lines) + "\n"
