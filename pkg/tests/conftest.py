"""Shared fixtures: the small named graphs most tests talk about."""

import pytest
from hypothesis import HealthCheck, settings

from metric_lines.core.graph import Graph, from_edge_list
from tests.helpers import complete, cycle, path

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def p3() -> Graph:
    return path(3)


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def k3() -> Graph:
    return complete(3)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def star() -> Graph:
    """K_{1,3} with center 0."""
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def house() -> Graph:
    """C5 plus the chord 1-4."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    """Point Settings at an empty config directory and clear the log env var."""
    monkeypatch.setenv("METRIC_LINES_CONFIG_DIR", str(tmp_path))
    monkeypatch.delenv("METRIC_LINES_LOG", raising=False)
    return tmp_path
