"""Transfer-system commands: enumerate-ts and count-saturated."""

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ..common import EXIT_NEGATIVE, build_table, check_format, console, emit_json, emit_model, exit_codes, settings
from ...serialization.codec import catalog_to_model
from ...transfer.enumeration import count_saturated_direct, enumerate_transfer_systems
from ...transfer.interior import enumerate_saturated
from ...utils.logger import get_logger

logger = get_logger(__name__)


def enumerate_ts(
    group: str = typer.Option(..., "--group", "-g", help="Group spec"),
    saturated: bool = typer.Option(False, "--saturated", help="Only saturated systems (via interior operators)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the JSON list here"),
) -> None:
    """Write every transfer system of a group as a JSON list."""
    with exit_codes("enumerate-ts", group=group):
        lattice = build_table(group).lattice
        if saturated:
            systems = list(enumerate_saturated(lattice))
        else:
            budget = settings()["transfer"]["max_enumeration_subgroups"]
            systems = list(enumerate_transfer_systems(lattice, budget))
        emit_model(catalog_to_model(lattice, systems, saturated_only=saturated), out)


def count_saturated(
    group: str = typer.Option(..., "--group", "-g", help="Group spec"),
    format: str = typer.Option("table", "--format", help="Output format (table, json)"),
) -> None:
    """Count saturated transfer systems two ways: interior operators and, within budget, a direct filter."""
    check_format(format, ("table", "json"))
    with exit_codes("count-saturated", group=group):
        lattice = build_table(group).lattice
        via_interior = sum(1 for _ in enumerate_saturated(lattice))
        budget = settings()["transfer"]["max_enumeration_subgroups"]
        direct = count_saturated_direct(lattice, budget) if len(lattice) <= budget else None

    data = {"group": lattice.group.label, "subgroups": len(lattice),
            "interior_operators": via_interior, "direct": direct}
    if format == "json":
        emit_json(data, None)
    else:
        table = Table(title=f"Saturated transfer systems on {lattice.group.label}", header_style="bold cyan")
        table.add_column("Method")
        table.add_column("Count", justify="right")
        table.add_row("Interior operators", str(via_interior))
        table.add_row("Direct filter", "skipped (over budget)" if direct is None else str(direct))
        console.print(table)

    if direct is not None and direct != via_interior:
        logger.error(f"Saturated counts disagree on {lattice.group.label}: {via_interior} != {direct}")
        raise typer.Exit(code=EXIT_NEGATIVE)
