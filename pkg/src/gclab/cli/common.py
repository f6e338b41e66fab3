"""Consoles, shared options and error reporting for the command groups."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from importlib import resources
from pathlib import Path

import typer
from rich.console import Console
from rich.markup import escape

from gclab.core.errors import GclabError
from gclab.io.records import dumps_records
from gclab.models.records import Record

# results go to stdout untouched by highlighting or wrapping
console = Console(highlight=False, soft_wrap=True, emoji=False)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)

records_opt = typer.Option(False, "--records", help="Emit one JSON record per result.")


def bundled(name: str) -> Path:
    """Path of a data file shipped inside the package."""
    return Path(str(resources.files("gclab.data").joinpath(name)))


def require_file(path: str) -> Path:
    resolved = Path(path)
    if not resolved.is_file():
        err_console.print(f"[red]File not found: {escape(path)}[/red]")
        raise typer.Exit(1)
    return resolved


def say(text: str = "") -> None:
    """Print literal text; brackets are mathematics, not markup."""
    console.print(text, markup=False)


def emit(lines: list[str], records: list[Record], as_records: bool) -> None:
    if as_records:
        typer.echo(dumps_records(records).decode(), nl=False)
        return
    for line in lines:
        say(line)


@contextmanager
def reported_errors() -> Iterator[None]:
    """Turn library validation failures into a red diagnostic and exit status 1."""
    try:
        yield
    except GclabError as exc:
        err_console.print(f"[red]{escape(str(exc))}[/red]")
        raise typer.Exit(1) from exc
