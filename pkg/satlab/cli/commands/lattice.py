"""Subgroup lattice commands: lattice, stats, export-dot."""

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ..common import (
    build_table,
    check_format,
    console,
    emit_json,
    emit_model,
    emit_text,
    exit_codes,
    load_system,
    load_universe,
)
from ...oracle.orbits import OrbitIndex
from ...serialization.codec import lattice_to_model
from ...visualization.hasse import export_dot, show_lattice


def lattice(
    group: str = typer.Option(..., "--group", "-g", help="Group spec, e.g. C5xC5"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the lattice JSON here"),
    format: str = typer.Option("json", "--format", help="Output format (json, tree)"),
) -> None:
    """Enumerate the subgroup lattice of a group."""
    check_format(format, ("json", "tree"))
    with exit_codes("lattice", group=group):
        table = build_table(group)
        if format == "tree":
            show_lattice(table.lattice)
            return
        emit_model(lattice_to_model(table.lattice), out)


def lattice_stats(table) -> dict:
    lattice = table.lattice
    orbits = OrbitIndex(table)
    by_order = {}
    for o in lattice.orders:
        by_order[int(o)] = by_order.get(int(o), 0) + 1
    return {
        "group": table.group.label,
        "order": table.group.order,
        "subgroups": len(lattice),
        "subgroups_by_order": dict(sorted(by_order.items())),
        "strict_pairs": len(lattice.strict_pairs()),
        "p_ranks": {p: lattice.p_rank(p) for p in table.group.primes},
        "orbits": len(orbits),
        "universes": orbits.universe_count,
    }


def stats(
    group: str = typer.Option(..., "--group", "-g", help="Group spec, e.g. C2xC2xC2"),
    format: str = typer.Option("table", "--format", help="Output format (table, json)"),
) -> None:
    """Show lattice statistics: subgroups per order, strict pairs, p-ranks and universe count."""
    check_format(format, ("table", "json"))
    with exit_codes("stats", group=group):
        data = lattice_stats(build_table(group))

    if format == "json":
        emit_json(data, None)
        return

    summary = Table(title=f"Sub({data['group']})", show_header=True, header_style="bold cyan")
    summary.add_column("Metric", style="dim")
    summary.add_column("Value")
    summary.add_row("|G|", str(data["order"]))
    summary.add_row("Subgroups", str(data["subgroups"]))
    summary.add_row("Strict pairs", str(data["strict_pairs"]))
    summary.add_row("p-ranks", ", ".join(f"{p}: {r}" for p, r in data["p_ranks"].items()))
    summary.add_row("Conjugation orbits", str(data["orbits"]))
    summary.add_row("Universes", f"{data['universes']:,}")
    console.print(summary)

    layers = Table(title="Subgroups per order", show_header=True, header_style="bold cyan")
    layers.add_column("|H|", justify="right")
    layers.add_column("Count", justify="right")
    for order, count in data["subgroups_by_order"].items():
        layers.add_row(str(order), str(count))
    console.print(layers)


def export_dot_cmd(
    group: str = typer.Option(..., "--group", "-g", help="Group spec"),
    ts: Optional[str] = typer.Option(None, "--ts", help="maximal, identity or a transfer-system JSON file"),
    universe: Optional[Path] = typer.Option(None, "--universe", "-u", help="Universe JSON to annotate nodes with"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the DOT file here"),
) -> None:
    """Export the Hasse diagram as Graphviz DOT, with transfer edges highlighted."""
    with exit_codes("export-dot", group=group):
        table = build_table(group)
        system = load_system(table.lattice, ts) if ts else None
        u = load_universe(table, str(universe)) if universe else None
        text = export_dot(table.lattice, system=system, table=table, universe=u)
    emit_text(text, out)
