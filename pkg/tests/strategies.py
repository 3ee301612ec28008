"""Hypothesis strategies for random graphs and metrics."""

from hypothesis import strategies as st

from metric_lines.core.graph import Graph, from_edge_list
from metric_lines.hereditary.construction import random_dh
from metric_lines.metric.space import FiniteMetric, shortest_path_metric


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    """A random spanning tree plus a random set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return from_edge_list(n, sorted(edges | set(extra)))


weights = st.tuples(
    st.floats(0, 1), st.floats(0, 1), st.floats(0, 1)
).filter(lambda w: any(x > 0.01 for x in w))


@st.composite
def dh_graphs(draw, min_n: int = 2, max_n: int = 16) -> Graph:
    n = draw(st.integers(min_n, max_n))
    return random_dh(n, draw(st.integers(0, 2**32 - 1)), draw(weights))


@st.composite
def metrics(draw, min_n: int = 2, max_n: int = 7, max_weight: int = 6) -> FiniteMetric:
    """Shortest-path closure of random positive symmetric weights."""
    n = draw(st.integers(min_n, max_n))
    w = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            w[u][v] = w[v][u] = draw(st.integers(1, max_weight))
    return shortest_path_metric(w)


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    return from_edge_list(n, [(draw(st.integers(0, v - 1)), v) for v in range(1, n)])
