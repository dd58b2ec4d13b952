"""Main entry point for the satlab CLI."""

from typing import Optional

import typer

from .common import init_settings
from .commands.lattice import export_dot_cmd, lattice, stats
from .commands.oracle import brute_check, census, verify_negative
from .commands.realize import realize
from .commands.systems import count_saturated, enumerate_ts
from .commands.tight_pair import app as tight_pair_app
from .. import __version__

app = typer.Typer(help="Transfer systems on finite Abelian groups and their realization by universes.",
                  no_args_is_help=True)

app.add_typer(tight_pair_app, name="tight-pair")

app.command(name="lattice")(lattice)
app.command(name="stats")(stats)
app.command(name="export-dot")(export_dot_cmd)
app.command(name="enumerate-ts")(enumerate_ts)
app.command(name="count-saturated")(count_saturated)
app.command(name="realize")(realize)
app.command(name="brute-check")(brute_check)
app.command(name="verify-negative")(verify_negative)
app.command(name="census")(census)


def _version(value: bool) -> None:
    if value:
        typer.echo(f"satlab {__version__}")
        raise typer.Exit()


@app.callback()
def configure(
    config: Optional[str] = typer.Option("config.yaml", "--config", "-c", help="Path to config.yaml"),
    version: bool = typer.Option(False, "--version", callback=_version, is_eager=True, help="Show the version"),
) -> None:
    """Load configuration and logging before any command runs."""
    init_settings(config)


def main():
    app()


if __name__ == "__main__":
    main()
