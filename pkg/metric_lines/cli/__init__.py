"""metric-lines CLI."""

from metric_lines.cli.app import app_main, run

__all__ = ["app_main", "run"]
