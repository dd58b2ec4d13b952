"""Tight-pair construction commands."""

from pathlib import Path
from typing import Optional, Tuple

import typer
from rich.table import Table

from ..common import EXIT_NEGATIVE, build_table, check_format, console, emit_model, exit_codes, settings
from ...characters.dual import CharacterTable
from ...constructors.cyclic import cyclic_tight_pair
from ...constructors.rank_two import rank_two_tight_pair
from ...engine.tight import TightPair, localize_tight_pairs, transport_tight_pair
from ...groups.abelian import GroupSpec, parse_group
from ...groups.lattice import enumerate_subgroups
from ...serialization.codec import load_model, run_to_model, tight_pair_from_model, tight_pair_to_model
from ...serialization.models import TightPairModel
from ...utils.validators import validate_seed

app = typer.Typer(help="Build tight pairs (D, J) and write them as JSON bundles.")

MODES = ("exhaustive", "sampled")


def _inductor_label(description: dict) -> str:
    if description["kind"] == "tensor":
        return f"tensor({_inductor_label(description['left'])}, {_inductor_label(description['right'])})"
    primes = ",".join(str(p) for p in description["primes"])
    return f"{description['kind']}[{primes}]"


def _show_pair(pair: TightPair) -> None:
    certificate = pair.certificate
    table = Table(title=f"Tight pair on {pair.table.group.label}", header_style="bold cyan")
    table.add_column("Check")
    table.add_column("Result")
    table.add_row("Sub-inductor", _inductor_label(pair.inductor.describe()))
    table.add_row("R-stable", str(certificate.r_stable))
    table.add_row("Gal-invariant", str(certificate.gal_invariant))
    for check in certificate.axioms.checks:
        table.add_row(f"Axiom: {check.name}", f"{check.passed} ({check.checked} checked)")
    table.add_row("Separation witnesses", str(len(certificate.witnesses)))
    table.add_row("Escapes", str(len(certificate.escapes)))
    table.add_row("Passed", "[green]yes[/green]" if certificate.passed else "[red]no[/red]")
    console.print(table)


@app.command()
def cyclic(
    p: int = typer.Option(..., "--p", help="Prime p >= 5"),
    n: int = typer.Option(1, "--n", help="Exponent: the group is C_{p^n}"),
    mode: str = typer.Option("exhaustive", "--mode", help="Axiom checking (exhaustive, sampled)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the tight pair JSON here"),
    format: str = typer.Option("json", "--format", help="Output format (json, table)"),
) -> None:
    """Deterministic tight pair on a cyclic p-group."""
    check_format(format, ("json", "table"))
    check_format(mode, MODES, "--mode")
    with exit_codes("tight-pair cyclic", p=p, n=n):
        pair = cyclic_tight_pair(p, n, mode=mode)
    if format == "table":
        _show_pair(pair)
        if out is None:
            return
    emit_model(tight_pair_to_model(pair), out)


@app.command()
def rank2(
    group: str = typer.Option(..., "--group", "-g", help="Odd p-group of rank two, e.g. C5xC5"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed (default: SATLAB_SEED)"),
    retries: Optional[int] = typer.Option(None, "--retries", help="Samples allowed per stage"),
    theta: Optional[float] = typer.Option(None, "--theta", help="Threshold factor in [0, 1]"),
    mode: str = typer.Option("exhaustive", "--mode", help="Axiom checking (exhaustive, sampled)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the run JSON here"),
    format: str = typer.Option("json", "--format", help="Output format (json, table)"),
) -> None:
    """Randomized tight pair on a rank-two p-group; exits 1 when a stage runs out of retries."""
    check_format(format, ("json", "table"))
    check_format(mode, MODES, "--mode")
    options = settings()["constructors"]
    with exit_codes("tight-pair rank2", group=group, seed=seed):
        table = build_table(group)
        run = rank_two_tight_pair(
            table,
            seed=validate_seed(options["seed"] if seed is None else seed),
            theta=options["theta"] if theta is None else theta,
            stage_retries=options["stage_retries"] if retries is None else retries,
            mode=mode,
        )

    if format == "table":
        stages = Table(title=f"Rank-two run on {run.group} (seed {run.seed})", header_style="bold cyan")
        stages.add_column("Stage", justify="right")
        stages.add_column("Threshold", justify="right")
        stages.add_column("Clusteredness", justify="right")
        stages.add_column("Retries", justify="right")
        for i, (t, c, r) in enumerate(zip(run.thresholds, run.clusteredness, run.retries)):
            stages.add_row(str(i + 1), str(t), str(c), str(r))
        console.print(stages)
        if run.bounds is not None:
            bounds = Table(title="Proof constants", header_style="bold cyan")
            bounds.add_column("Constant")
            bounds.add_column("Value")
            for name, value in run.bounds.rows():
                bounds.add_row(name, value)
            console.print(bounds)
        if run.pair is not None:
            _show_pair(run.pair)
        elif run.failure:
            console.print(f"[red]Failed at stage {run.failed_stage}: {run.failure}[/red]")
    if format == "json" or out is not None:
        emit_model(run_to_model(run), out)
    if not run.success:
        raise typer.Exit(code=EXIT_NEGATIVE)


def _budgets() -> dict:
    groups = settings()["groups"]
    return {"max_elements": groups["max_elements"], "max_subgroups": groups["max_subgroups"]}


def _load_pair(path: Path) -> TightPair:
    model = load_model(TightPairModel, path)
    table = CharacterTable(enumerate_subgroups(parse_group(model.group), **_budgets()))
    return tight_pair_from_model(table, model)


@app.command()
def tensor(
    inputs: Tuple[Path, Path] = typer.Option(..., "--inputs", help="Two tight-pair JSON files on groups of coprime order"),
    mode: str = typer.Option("exhaustive", "--mode", help="Axiom checking (exhaustive, sampled)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the tensor product JSON here"),
    format: str = typer.Option("json", "--format", help="Output format (json, table)"),
) -> None:
    """Tensor two tight pairs on G_1 and G_2 into one on G_1 x G_2."""
    check_format(format, ("json", "table"))
    check_format(mode, MODES, "--mode")
    with exit_codes("tight-pair tensor", inputs=[str(p) for p in inputs]):
        first, second = (_load_pair(path) for path in inputs)
        left, right = first.table.group.orders, second.table.group.orders
        product = CharacterTable(enumerate_subgroups(GroupSpec(left + right), **_budgets()))
        parts = [
            transport_tight_pair(first, product, range(len(left)), mode=mode),
            transport_tight_pair(second, product, range(len(left), len(left) + len(right)), mode=mode),
        ]
        pair = localize_tight_pairs(parts, mode=mode)
    if format == "table":
        _show_pair(pair)
        if out is None:
            return
    emit_model(tight_pair_to_model(pair), out)
