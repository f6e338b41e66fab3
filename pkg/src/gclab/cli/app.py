"""Root Typer app with global options."""

from __future__ import annotations

from typing import Optional

import typer

from gclab.cli.dim import dim_app
from gclab.cli.gc import gc_app
from gclab.cli.signs import signs_app
from gclab.cli.trees import trees_app

app = typer.Typer(
    name="gclab",
    help="Exact computations in the Kontsevich graph complex and its tree and sign calculus.",
    no_args_is_help=True,
)
app.add_typer(gc_app, name="gc", help="Graph complex: bases, differentials, homology, cycles.")
app.add_typer(trees_app, name="trees", help="Trees, Lie-hedra and decomposition posets.")
app.add_typer(signs_app, name="signs", help="Jacobi, L-infinity and half-edge signs.")
app.add_typer(dim_app, name="dim", help="Dimension calculus and multiplicity ledgers.")


def _version_callback(value: bool) -> None:
    if value:
        from gclab import __version__

        typer.echo(f"gclab {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None, "--version", "-V", callback=_version_callback, is_eager=True, help="Show version."
    ),
) -> None:
    """gclab: graph complex workbench over the rationals."""
