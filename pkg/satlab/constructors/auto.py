"""Tight pairs for arbitrary Abelian groups, one primary part at a time."""

from dataclasses import dataclass, field
from typing import List, Optional

from .cyclic import MIN_PRIME, cyclic_tight_pair_on
from .rank_two import DEFAULT_STAGE_RETRIES, rank_two_tight_pair
from ..characters.dual import CharacterTable
from ..engine.tight import TightPair, localize_tight_pairs, transport_tight_pair
from ..groups.abelian import GroupSpec, prime_power_exponent
from ..groups.lattice import enumerate_subgroups
from ..utils.logger import get_logger
from ..utils.validators import ConstructionError

logger = get_logger(__name__)


@dataclass
class AutoOutcome:
    """Tight pair for the whole group, or the first part that could not be handled."""

    pair: Optional[TightPair] = None
    parts: List[str] = field(default_factory=list)
    failed_prime: Optional[int] = None
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.pair is not None


def _part_pair(table: CharacterTable, p: int, seed: int, theta: float, stage_retries: int,
               mode: str) -> TightPair:
    group = table.group
    rank = table.lattice.p_rank(p)
    if rank == 1:
        if p < MIN_PRIME:
            raise ConstructionError(f"cyclic {p}-part needs p >= {MIN_PRIME}", "group")
        return cyclic_tight_pair_on(table, p, mode=mode)
    if rank == 2 and p > 2:
        part = group.part(p)
        if any(prime_power_exponent(group.orders[i], p) < 0 for i in part.indices):
            raise ConstructionError(f"the {p}-part of {group.label} is not a block of coordinates", "group")
        sub = GroupSpec(tuple(group.orders[i] for i in part.indices))
        sub_table = CharacterTable(enumerate_subgroups(sub))
        run = rank_two_tight_pair(sub_table, seed=seed, theta=theta, stage_retries=stage_retries,
                                  mode=mode, with_bounds=False)
        if not run.success:
            raise ConstructionError(f"rank-two run on {sub.label} failed: {run.failure}", "group")
        if len(part.indices) == len(group.orders):
            return run.pair
        return transport_tight_pair(run.pair, table, part.indices, mode=mode)
    raise ConstructionError(f"no construction for a {p}-part of rank {rank}", "group")


def auto_tight_pair(table: CharacterTable, seed: int = 0, theta: float = 0.0,
                    stage_retries: int = DEFAULT_STAGE_RETRIES, mode: str = "exhaustive") -> AutoOutcome:
    """Build a tight pair on each primary part and tensor them together.

    Cyclic parts with p >= 5 use the cyclic construction; odd rank-two parts use
    the randomized pipeline. Any other part stops the run.
    """
    outcome = AutoOutcome()
    pairs = []
    for p in table.group.primes:
        try:
            pairs.append(_part_pair(table, p, seed, theta, stage_retries, mode))
        except ConstructionError as e:
            outcome.failed_prime = p
            outcome.failure = e.message
            logger.info(f"No tight pair for the {p}-part of {table.group.label}: {e.message}")
            return outcome
        outcome.parts.append(f"{p}:{pairs[-1].inductor.kind}")
    outcome.pair = localize_tight_pairs(pairs, mode=mode)
    return outcome
