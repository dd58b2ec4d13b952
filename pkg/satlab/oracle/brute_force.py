"""Exhaustive realizability search over all universes on G."""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .orbits import OrbitIndex
from ..characters.dual import CharacterTable, CharSet
from ..groups.abelian import GroupSpec
from ..groups.lattice import enumerate_subgroups
from ..transfer.systems import TransferSystem
from ..utils.helpers import chunk_range, iter_bits
from ..utils.logger import get_logger, log_performance

logger = get_logger(__name__)

DEFAULT_MAX_ORBITS = 22
DEFAULT_CHUNK_SIZE = 4096


@dataclass(frozen=True)
class Witness:
    """The first universe (least orbit mask) realizing the system."""

    universe: CharSet
    mask: int
    searched: int


@dataclass(frozen=True)
class Unrealizable:
    searched: int


@dataclass(frozen=True)
class BudgetExceeded:
    orbits: int
    limit: int


SearchOutcome = Union[Witness, Unrealizable, BudgetExceeded]


class TrEvaluator:
    """Computes Tr(U) for universes given as orbit masks.

    Each orbit is restricted to every subgroup once, so D_U(H) is a union of
    precomputed bitsets.
    """

    def __init__(self, table: CharacterTable, orbits: Optional[OrbitIndex] = None):
        self.table = table
        self.orbits = orbits if orbits is not None else OrbitIndex(table)
        lattice = table.lattice
        top = lattice.top
        self.restricted: List[List[int]] = [
            [table.restrict_bits(o, top, h) for o in self.orbits.orbits] for h in range(len(lattice))
        ]
        self.pairs = lattice.strict_pairs()

    def value(self, mask: int, h: int) -> int:
        bits = 1
        row = self.restricted[h]
        for j in iter_bits(mask):
            bits |= row[j]
        return bits

    def _holds(self, values: Dict[int, int], mask: int, k: int, h: int) -> bool:
        for s in (k, h):
            if s not in values:
                values[s] = self.value(mask, s)
        return self.table.induce_bits(values[k], k, h) & ~values[h] == 0

    def edges(self, mask: int) -> FrozenSet[Tuple[int, int]]:
        values: Dict[int, int] = {}
        return frozenset((k, h) for k, h in self.pairs if self._holds(values, mask, k, h))

    def realizes(self, mask: int, edges: Sequence[Tuple[int, int]], non_edges: Sequence[Tuple[int, int]]) -> bool:
        """Tr(U) == R, stopping at the first disagreement."""
        values: Dict[int, int] = {}
        for k, h in edges:
            if not self._holds(values, mask, k, h):
                return False
        for k, h in non_edges:
            if self._holds(values, mask, k, h):
                return False
        return True


def _split(table: CharacterTable, system: TransferSystem) -> Tuple[List, List]:
    edges = system.sorted_edges()
    present = set(edges)
    non_edges = [pair for pair in table.lattice.strict_pairs() if pair not in present]
    return edges, non_edges


def _scan(evaluator: TrEvaluator, edges, non_edges, masks: range) -> Optional[int]:
    for mask in masks:
        if evaluator.realizes(mask, edges, non_edges):
            return mask
    return None


_WORKER_CACHE: Dict[Tuple[int, ...], TrEvaluator] = {}


def _worker_scan(orders: Tuple[int, ...], edges: Tuple, non_edges: Tuple, start: int, stop: int) -> Optional[int]:
    evaluator = _WORKER_CACHE.get(orders)
    if evaluator is None:
        evaluator = TrEvaluator(CharacterTable(enumerate_subgroups(GroupSpec(orders))))
        _WORKER_CACHE[orders] = evaluator
    return _scan(evaluator, edges, non_edges, range(start, stop))


def brute_force_realizable(system: TransferSystem, table: Optional[CharacterTable] = None,
                           max_orbits: int = DEFAULT_MAX_ORBITS, jobs: int = 1,
                           chunk_size: int = DEFAULT_CHUNK_SIZE) -> SearchOutcome:
    """Search every universe, in increasing orbit-mask order, for one with Tr(U) = R.

    The returned witness is the least mask whatever ``jobs`` is. With
    ``jobs > 1`` chunks of masks are scanned in worker processes.
    """
    start = time.time()
    table = table if table is not None else CharacterTable(system.lattice)
    orbits = OrbitIndex(table)
    if len(orbits) > max_orbits:
        logger.warning(f"Brute force on {table.group.label} needs {len(orbits)} orbits > budget {max_orbits}")
        return BudgetExceeded(len(orbits), max_orbits)

    edges, non_edges = _split(table, system)
    total = orbits.universe_count
    found: Optional[int] = None
    if jobs <= 1 or total <= chunk_size:
        found = _scan(TrEvaluator(table, orbits), edges, non_edges, range(total))
    else:
        chunks = chunk_range(total, chunk_size)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_worker_scan, table.group.orders, tuple(edges), tuple(non_edges), c.start, c.stop)
                for c in chunks
            ]
            for future in futures:
                result = future.result()
                if result is not None:
                    found = result
                    for rest in futures:
                        rest.cancel()
                    break

    elapsed = (time.time() - start) * 1000
    if found is None:
        log_performance(logger, "brute_force_realizable", elapsed,
                        group=table.group.label, universes=total, outcome="unrealizable")
        return Unrealizable(total)
    log_performance(logger, "brute_force_realizable", elapsed,
                    group=table.group.label, universes=found + 1, outcome="witness")
    return Witness(orbits.universe_from_mask(found), found, found + 1)
