"""Exhaustive enumeration of transfer systems on small lattices."""

from typing import Iterator, List, Optional

import numpy as np

from .systems import TransferSystem, _close, is_saturated
from ..groups.lattice import SubgroupLattice
from ..utils.validators import BudgetExceededError

DEFAULT_MAX_ENUMERATION_SUBGROUPS = 12


def enumerate_transfer_systems(lattice: SubgroupLattice,
                               max_subgroups: Optional[int] = DEFAULT_MAX_ENUMERATION_SUBGROUPS
                               ) -> Iterator[TransferSystem]:
    """Yield every transfer system on ``lattice`` exactly once.

    Depth-first over the strict pairs in (K, H) order; each pair is either
    excluded or included, and an inclusion is pruned when its closure forces
    a previously excluded pair. The identity system comes first.

    Raises:
        BudgetExceededError: If the lattice has more than ``max_subgroups`` subgroups
    """
    if max_subgroups is not None and len(lattice) > max_subgroups:
        raise BudgetExceededError("enumeration subgroups", max_subgroups, len(lattice))

    pairs = lattice.strict_pairs()
    n = len(lattice)

    def visit(i: int, rel: np.ndarray, excluded: List[tuple]) -> Iterator[TransferSystem]:
        while i < len(pairs) and rel[pairs[i]]:
            i += 1  # forced by earlier inclusions
        if i == len(pairs):
            yield TransferSystem.from_matrix(lattice, rel)
            return
        pair = pairs[i]
        excluded.append(pair)
        yield from visit(i + 1, rel, excluded)
        excluded.pop()

        grown = rel.copy()
        grown[pair] = True
        grown = _close(lattice, grown)
        if not any(grown[p] for p in excluded):
            yield from visit(i + 1, grown, excluded)

    yield from visit(0, np.eye(n, dtype=bool), [])


def count_saturated_direct(lattice: SubgroupLattice,
                           max_subgroups: Optional[int] = DEFAULT_MAX_ENUMERATION_SUBGROUPS) -> int:
    """Number of saturated transfer systems, by filtering the full enumeration."""
    return sum(1 for system in enumerate_transfer_systems(lattice, max_subgroups) if is_saturated(system))
