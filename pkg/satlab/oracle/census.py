"""Census of transfer systems, saturated systems and realized systems per group."""

import csv
import io
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Union

from .brute_force import DEFAULT_MAX_ORBITS, TrEvaluator
from .counting import elementary_abelian_shape, saturated_lower_bound
from .orbits import OrbitIndex
from ..characters.dual import CharacterTable
from ..groups.abelian import GroupSpec, abelian_groups_of_order
from ..groups.lattice import DEFAULT_MAX_ELEMENTS, DEFAULT_MAX_SUBGROUPS, enumerate_subgroups
from ..transfer.enumeration import DEFAULT_MAX_ENUMERATION_SUBGROUPS, enumerate_transfer_systems
from ..transfer.interior import enumerate_saturated
from ..transfer.systems import TransferSystem, validate_transfer_system
from ..utils.helpers import atomic_write_text
from ..utils.logger import LoggerMixin, log_performance
from ..utils.validators import BudgetExceededError, TransferSystemError


@dataclass(frozen=True)
class CensusRow:
    group: str
    subgroups: int
    transfer_systems: Optional[int]
    saturated: int
    universes: int
    realized_saturated: int
    unrealized_saturated: int
    orbits: int
    saturated_lower_bound: Optional[int] = None


CENSUS_COLUMNS = [f.name for f in fields(CensusRow)]


def realized_transfer_systems(table: CharacterTable, max_orbits: int = DEFAULT_MAX_ORBITS) -> Dict[TransferSystem, int]:
    """Every Tr(U) over all universes, mapped to the least orbit mask producing it.

    Raises:
        BudgetExceededError: If there are more than ``max_orbits`` orbits
        TransferSystemError: If some Tr(U) is not a transfer system
    """
    orbits = OrbitIndex(table)
    if len(orbits) > max_orbits:
        raise BudgetExceededError("orbits", max_orbits, len(orbits))
    evaluator = TrEvaluator(table, orbits)
    lattice = table.lattice
    realized: Dict[TransferSystem, int] = {}
    for mask in range(orbits.universe_count):
        system = TransferSystem(lattice, evaluator.edges(mask))
        if system not in realized:
            report = validate_transfer_system(lattice, system.matrix())
            if not report.valid:
                raise TransferSystemError(f"Tr of orbit mask {mask} fails {report.axiom}", "universe")
            realized[system] = mask
    return realized


class Census(LoggerMixin):
    """Builds census rows under the configured budgets."""

    def __init__(self, max_orbits: int = DEFAULT_MAX_ORBITS,
                 max_enumeration_subgroups: int = DEFAULT_MAX_ENUMERATION_SUBGROUPS,
                 max_elements: int = DEFAULT_MAX_ELEMENTS, max_subgroups: int = DEFAULT_MAX_SUBGROUPS):
        self.max_orbits = max_orbits
        self.max_enumeration_subgroups = max_enumeration_subgroups
        self.max_elements = max_elements
        self.max_subgroups = max_subgroups

    def row(self, group: GroupSpec) -> CensusRow:
        """One census row.

        Raises:
            BudgetExceededError: If the group, its lattice or its universes exceed a budget
            TransferSystemError: If an elementary Abelian group has fewer saturated
                systems than the lower bound
        """
        start = time.time()
        lattice = enumerate_subgroups(group, self.max_elements, self.max_subgroups)
        table = CharacterTable(lattice)
        realized = realized_transfer_systems(table, self.max_orbits)
        saturated = list(enumerate_saturated(lattice))
        realized_saturated = sum(1 for s in saturated if s in realized)
        if len(lattice) <= self.max_enumeration_subgroups:
            count = sum(1 for _ in enumerate_transfer_systems(lattice, self.max_enumeration_subgroups))
        else:
            count = None
        orbits = len(OrbitIndex(table))
        shape = elementary_abelian_shape(group)
        bound = saturated_lower_bound(*shape) if shape else None
        if bound is not None and len(saturated) < bound:
            raise TransferSystemError(
                f"{group.label} has {len(saturated)} saturated systems, below the lower bound {bound}", "saturated")
        row = CensusRow(
            group=group.label,
            subgroups=len(lattice),
            transfer_systems=count,
            saturated=len(saturated),
            universes=1 << orbits,
            realized_saturated=realized_saturated,
            unrealized_saturated=len(saturated) - realized_saturated,
            orbits=orbits,
            saturated_lower_bound=bound,
        )
        log_performance(self.logger, "census_row", (time.time() - start) * 1000, group=group.label)
        return row

    def run(self, groups: Iterable[GroupSpec]) -> List[CensusRow]:
        """Rows for every group within budget; the others are skipped with a warning."""
        rows = []
        for group in groups:
            try:
                rows.append(self.row(group))
            except BudgetExceededError as e:
                self.logger.warning(f"Skipping {group.label}: {e}")
        return rows

    def run_orders(self, max_order: int, min_order: int = 1) -> List[CensusRow]:
        """Rows for every Abelian group with min_order <= |G| <= max_order."""
        groups = [g for n in range(max(2, min_order), max_order + 1) for g in abelian_groups_of_order(n)]
        return self.run(groups)


def census_csv(rows: Iterable[CensusRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CENSUS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in asdict(row).items()})
    return buffer.getvalue()


def write_census(rows: Iterable[CensusRow], path: Union[str, Path]) -> Path:
    return atomic_write_text(path, census_csv(rows))
