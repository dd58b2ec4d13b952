"""The realize command: build a universe whose transfer system is the requested one."""

import time
from pathlib import Path
from typing import Optional

import typer
from rich.panel import Panel

from ..common import EXIT_INPUT, EXIT_NEGATIVE, build_table, check_format, console, emit_model, exit_codes, load_system, settings
from ...constructors.auto import auto_tight_pair
from ...engine.realize import realize as realize_universe
from ...serialization.codec import load_model, realization_to_model, tight_pair_from_model
from ...serialization.models import TightPairModel
from ...utils.helpers import format_duration
from ...utils.validators import validate_seed


def realize(
    group: str = typer.Option(..., "--group", "-g", help="Group spec, e.g. C35"),
    ts: str = typer.Option("maximal", "--ts", help="maximal, identity or a transfer-system JSON file"),
    tight_pair: str = typer.Option("auto", "--tight-pair", help="'auto' or a tight-pair JSON file"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for randomized constructions (default: SATLAB_SEED)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the realization JSON here"),
    format: str = typer.Option("json", "--format", help="Output format (json, table)"),
) -> None:
    """Realize a saturated transfer system by a universe."""
    check_format(format, ("json", "table"))
    options = settings()["constructors"]
    start = time.time()
    with exit_codes("realize", group=group, ts=ts):
        table = build_table(group)
        system = load_system(table.lattice, ts)
        if tight_pair == "auto":
            chosen_seed = validate_seed(options["seed"] if seed is None else seed)
            outcome = auto_tight_pair(table, seed=chosen_seed, theta=options["theta"],
                                      stage_retries=options["stage_retries"])
            if not outcome.ok:
                console.print(f"[red]No tight pair for the {outcome.failed_prime}-part: {outcome.failure}[/red]")
                p = outcome.failed_prime
                # an odd rank-two part can fail by chance; anything else is outside the constructions
                randomized = p > 2 and table.lattice.p_rank(p) == 2
                raise typer.Exit(code=EXIT_NEGATIVE if randomized else EXIT_INPUT)
            pair = outcome.pair
            method = "auto[" + ",".join(outcome.parts) + "]"
        else:
            pair = tight_pair_from_model(table, load_model(TightPairModel, tight_pair))
            method = f"file[{pair.inductor.kind}]"
        universe = realize_universe(system, pair, max_rounds=options["max_rounds"])

    model = realization_to_model(table, system, universe, method)
    if format == "table":
        console.print(Panel(
            f"Group: {table.group.label}\n"
            f"Strict edges realized: {len(system)}\n"
            f"Universe: {len(universe)} of {table.size(table.lattice.top)} characters\n"
            f"Tight pair: {method}\n"
            f"Time: {format_duration(time.time() - start)}",
            title="Realization", border_style="green",
        ))
        if out is None:
            return
    emit_model(model, out)
