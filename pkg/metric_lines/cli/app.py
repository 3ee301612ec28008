"""Main Typer application, logging setup and the exit-code boundary."""

from __future__ import annotations

import logging
import os
import sys
from typing import Optional

import typer

try:  # typer >= 0.26 vendors click as typer._click
    from typer import _click as click
except ImportError:  # older typer raises the standalone click exceptions
    import click
from pydantic import ValidationError
from rich import print as rprint
from rich.logging import RichHandler
from rich.markup import escape

import metric_lines
from metric_lines.cli import instance_cmd, sweep_cmd
from metric_lines.cli.config_cmd import config_app
from metric_lines.cli.generate_cmd import generate_app
from metric_lines.cli.output import EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, err_console
from metric_lines.config.settings import Settings
from metric_lines.core.errors import MetricLinesError

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="metric-lines",
    help="Lines in finite metric spaces and distance-hereditary graphs",
    add_completion=False,
)

app.command("lines")(instance_cmd.lines)
app.command("check")(instance_cmd.check)
app.command("recognize")(instance_cmd.recognize)
app.command("lemmas")(instance_cmd.lemmas)
app.command("sweep")(sweep_cmd.sweep)
app.command("two-metric")(sweep_cmd.two_metric)
app.command("scaling")(sweep_cmd.scaling)
app.add_typer(generate_app, name="generate")
app.add_typer(config_app, name="config")


def _resolve_level(flag: Optional[str]) -> str:
    if flag:
        return flag.upper()
    env = os.environ.get("METRIC_LINES_LOG")
    if env:
        return env.upper()
    try:
        return Settings.load_yaml().log_level
    except ValidationError as exc:
        raise typer.BadParameter(f"invalid settings: {exc}") from exc


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="DEBUG, INFO, WARNING or ERROR (default: METRIC_LINES_LOG)"
    ),
) -> None:
    level = _resolve_level(log_level)
    if not isinstance(logging.getLevelName(level), int):
        raise typer.BadParameter(f"unknown log level {level!r}", param_hint="--log-level")
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@app.command()
def version() -> None:
    """Print the metric-lines version."""
    rprint(f"[bold cyan]metric-lines[/bold cyan] v{metric_lines.__version__}")


def run(argv: Optional[list[str]] = None) -> int:
    """Run the CLI and return its exit code: 0 ok, 1 usage or input, 2 violation, 3 internal."""
    try:
        result = app(args=argv, standalone_mode=False, prog_name="metric-lines")
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INPUT
    except MetricLinesError as exc:
        err_console.print(f"[red]error:[/red] {escape(str(exc))}")
        return EXIT_INPUT
    except ValidationError as exc:
        err_console.print(f"[red]invalid settings:[/red] {escape(str(exc))}")
        return EXIT_INPUT
    except Exception:
        logger.exception("internal error")
        return EXIT_INTERNAL
    return result if isinstance(result, int) else EXIT_OK


def app_main() -> None:
    sys.exit(run())
