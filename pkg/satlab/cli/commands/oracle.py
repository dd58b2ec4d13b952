"""Oracle commands: brute-check, verify-negative and census."""

from pathlib import Path
from typing import List, Optional

import typer
from rich.table import Table

from ..common import (
    EXIT_BUDGET,
    EXIT_INPUT,
    EXIT_NEGATIVE,
    build_table,
    check_format,
    console,
    emit_model,
    emit_text,
    exit_codes,
    load_system,
    settings,
)
from ...groups.abelian import parse_group
from ...oracle.brute_force import BudgetExceeded, Unrealizable, Witness, brute_force_realizable
from ...oracle.census import CENSUS_COLUMNS, Census, census_csv
from ...oracle.negative import verify_negative_rank3
from ...serialization.codec import negative_to_model, search_to_model


def brute_check(
    group: str = typer.Option(..., "--group", "-g", help="Group spec, e.g. C15"),
    ts: str = typer.Option(..., "--ts", help="maximal, identity or a transfer-system JSON file"),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", help="Worker processes for the search"),
    budget: Optional[int] = typer.Option(None, "--budget", help="Maximum number of conjugation orbits"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the search outcome JSON here"),
) -> None:
    """Decide by exhaustive search whether some universe realizes a transfer system.

    Exits 0 with a witness, 1 when no universe realizes the system and 3 when
    the search is over budget.
    """
    oracle = settings()["oracle"]
    with exit_codes("brute-check", group=group, ts=ts):
        table = build_table(group)
        system = load_system(table.lattice, ts)
        outcome = brute_force_realizable(
            system, table,
            max_orbits=oracle["max_orbits"] if budget is None else budget,
            jobs=oracle["jobs"] if jobs is None else jobs,
            chunk_size=oracle["chunk_size"],
        )
    emit_model(search_to_model(table, outcome), out)
    if isinstance(outcome, Unrealizable):
        raise typer.Exit(code=EXIT_NEGATIVE)
    if isinstance(outcome, BudgetExceeded):
        raise typer.Exit(code=EXIT_BUDGET)


def verify_negative(
    p: int = typer.Option(..., "--p", help="Prime (2 or 3)"),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", help="Worker processes for the search"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the report JSON here"),
) -> None:
    """Confirm that the saturated system generated by one transfer into a plane of (C_p)^3 is not realizable.

    Exits 0 when the expected negative result is confirmed.
    """
    oracle = settings()["oracle"]
    with exit_codes("verify-negative", p=p):
        report = verify_negative_rank3(p, jobs=oracle["jobs"] if jobs is None else jobs,
                                       max_orbits=oracle["max_orbits"])
    emit_model(negative_to_model(report), out)
    if isinstance(report.outcome, BudgetExceeded):
        raise typer.Exit(code=EXIT_BUDGET)
    if isinstance(report.outcome, Witness) or not report.explicit_form:
        console.print("[red]The rank-3 system did not behave as expected[/red]")
        raise typer.Exit(code=EXIT_NEGATIVE)


def census(
    group: Optional[List[str]] = typer.Option(None, "--group", "-g", help="Group spec (repeatable)"),
    max_order: Optional[int] = typer.Option(None, "--max-order", help="Every Abelian group of order up to this"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the CSV here"),
    format: str = typer.Option("csv", "--format", help="Output format (csv, table)"),
) -> None:
    """Tabulate transfer systems, saturated systems and their realizations per group."""
    check_format(format, ("csv", "table"))
    if not group and max_order is None:
        console.print("[red]Give --group or --max-order[/red]")
        raise typer.Exit(code=EXIT_INPUT)
    config = settings()
    runner = Census(
        max_orbits=config["oracle"]["max_orbits"],
        max_enumeration_subgroups=config["transfer"]["max_enumeration_subgroups"],
        max_elements=config["groups"]["max_elements"],
        max_subgroups=config["groups"]["max_subgroups"],
    )
    with exit_codes("census"):
        groups = [parse_group(g) for g in group or []]
        if len(groups) == 1:
            rows = [runner.row(groups[0])]
        elif groups:
            rows = runner.run(groups)
        else:
            rows = runner.run_orders(max_order)
    if not rows:
        console.print("[yellow]Every requested group is over budget[/yellow]")
        raise typer.Exit(code=EXIT_BUDGET)

    if format == "table":
        table = Table(title="Census", header_style="bold cyan")
        for column in CENSUS_COLUMNS:
            table.add_column(column, justify="left" if column == "group" else "right")
        for row in rows:
            table.add_row(*("-" if getattr(row, c) is None else str(getattr(row, c)) for c in CENSUS_COLUMNS))
        console.print(table)
        if out is None:
            return
    emit_text(census_csv(rows), out)
