"""Shared plumbing for satlab commands: settings, inputs, output and exit codes."""

import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, Optional

import pydantic
import typer
from rich.console import Console

from ..characters.dual import CharacterTable, CharSet
from ..config.config_manager import ConfigValidationError, load_config
from ..groups.abelian import parse_group
from ..groups.lattice import SubgroupLattice, enumerate_subgroups
from ..serialization.codec import charset_from_model, load_model, save_model, transfer_system_from_model
from ..serialization.models import CharSetModel, RealizationModel, TransferSystemModel
from ..transfer.systems import TransferSystem
from ..utils.helpers import atomic_write_text, load_json_file
from ..utils.logger import get_logger, log_error_with_context, setup_logging
from ..utils.validators import BudgetExceededError, SatlabError, ValidationError

logger = get_logger(__name__)
console = Console()

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_settings: Dict[str, Any] = {}


def init_settings(config_path: Optional[str]) -> Dict[str, Any]:
    """Load the configuration and configure logging; exit 2 on a bad config."""
    try:
        config = load_config(config_path)
    except ConfigValidationError as e:
        console.print(f"[red]Configuration error: {e}[/red]")
        raise typer.Exit(code=EXIT_INPUT)
    setup_logging(config)
    _settings.clear()
    _settings.update(config)
    return config


def settings() -> Dict[str, Any]:
    if not _settings:
        init_settings("config.yaml")
    return _settings


@contextmanager
def exit_codes(operation: str, **context) -> Iterator[None]:
    """Turn satlab exceptions into the CLI exit codes.

    Input errors exit 2, budget errors 3, failed verifications or
    realizations 1.
    """
    try:
        yield
    except typer.Exit:
        raise
    except BudgetExceededError as e:
        logger.warning(f"{operation}: {e}")
        console.print(f"[yellow]Budget exceeded: {e}[/yellow]")
        raise typer.Exit(code=EXIT_BUDGET)
    except (ValidationError, ConfigValidationError) as e:
        console.print(f"[red]Invalid input: {e}[/red]")
        raise typer.Exit(code=EXIT_INPUT)
    except SatlabError as e:
        log_error_with_context(logger, e, operation, **context)
        console.print(f"[red]{type(e).__name__}: {e}[/red]")
        raise typer.Exit(code=EXIT_NEGATIVE)


def build_table(group: str) -> CharacterTable:
    """Parse a group spec and build its character table under the configured budgets."""
    budgets = settings()["groups"]
    spec = parse_group(group)
    lattice = enumerate_subgroups(spec, budgets["max_elements"], budgets["max_subgroups"])
    return CharacterTable(lattice)


def load_system(lattice: SubgroupLattice, ts: str) -> TransferSystem:
    """``maximal``, ``identity`` or a path to a transfer-system JSON file."""
    if ts == "maximal":
        return TransferSystem.maximal(lattice)
    if ts == "identity":
        return TransferSystem.identity(lattice)
    return transfer_system_from_model(lattice, load_model(TransferSystemModel, ts))


def load_universe(table: CharacterTable, path: str) -> CharSet:
    """Read a universe from a character-set file or from the output of ``realize``."""
    try:
        data = load_json_file(path)
    except ValueError as e:
        raise ValidationError(str(e), "universe") from e
    try:
        if isinstance(data, dict) and "universe" in data:
            model = RealizationModel.model_validate(data).universe
        else:
            model = CharSetModel.model_validate(data)
    except pydantic.ValidationError as e:
        raise ValidationError(f"{path} holds no character set: {e.error_count()} problem(s)", "universe") from e
    universe = charset_from_model(table, model)
    if universe.subgroup_id != table.lattice.top or not table.is_universe(universe):
        raise ValidationError(f"{path} is not a universe on {table.group.label}", "universe")
    return universe


def check_format(value: str, allowed: tuple, option: str = "--format") -> str:
    if value not in allowed:
        raise typer.BadParameter(f"expected one of {', '.join(allowed)}", param_hint=option)
    return value


def emit_model(model: pydantic.BaseModel, out: Optional[Path]) -> None:
    """Write a JSON artifact to ``out`` atomically, or print it when no path is given."""
    if out is not None:
        save_model(model, out)
        console.print(f"[green]Wrote {out}[/green]")
    else:
        typer.echo(model.model_dump_json(indent=2))


def emit_text(text: str, out: Optional[Path]) -> None:
    if out is not None:
        atomic_write_text(out, text)
        console.print(f"[green]Wrote {out}[/green]")
    else:
        typer.echo(text, nl=not text.endswith("\n"))


def emit_json(data: Any, out: Optional[Path]) -> None:
    emit_text(json.dumps(data, indent=2, default=str) + "\n", out)
