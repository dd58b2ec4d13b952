"""Restriction partitions of a fiber I_K^H(chi) for K maximal in an odd-order H."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

from ..characters.dual import CharacterTable
from ..utils.helpers import iter_bits
from ..utils.validators import ConstructionError

Block = FrozenSet[int]

CLAIMS = (
    "refinement",
    "equality_in_s_chi",
    "block_size",
    "discrete_outside_s_chi",
    "unique_singleton",
    "small_intersections",
)


@dataclass(frozen=True)
class PartitionStructure:
    """X = I_K^H(chi) with its partition P_L for every L in (K, H]."""

    h: int
    k: int
    chi: int
    fiber: Tuple[int, ...]
    partitions: Dict[int, Tuple[Block, ...]]
    s_chi: FrozenSet[int]
    claims: Dict[str, bool] = field(default_factory=dict)

    @property
    def all_claims_hold(self) -> bool:
        return all(self.claims.values())


def _refines(fine: Tuple[Block, ...], coarse: Tuple[Block, ...]) -> bool:
    return all(any(block <= other for other in coarse) for block in fine)


def partition_structure(table: CharacterTable, h: int, k: int, chi: int) -> PartitionStructure:
    """Partition the fiber X of chi by restriction to each L in (K, H], modulo conjugation.

    tau and tau' share a block of P_L when tau|L equals tau'|L or its conjugate.
    S_chi collects the L with K meet L inside the kernel of chi. The six
    structural claims are evaluated and stored on the result.

    Raises:
        ConstructionError: If |H| is even or K is not maximal in H
    """
    lattice = table.lattice
    if lattice[h].order % 2 == 0:
        raise ConstructionError(f"subgroup {h} has even order", "h")
    if k not in lattice.maximal_subgroups(h):
        raise ConstructionError(f"subgroup {k} is not maximal in subgroup {h}", "k")
    if not 0 <= chi < table.size(k):
        raise ConstructionError(f"character index {chi} out of range", "chi")

    fiber = tuple(iter_bits(table.fibers(k, h)[chi]))
    interval = [int(l) for l in lattice.open_interval(k, h)]
    partitions: Dict[int, Tuple[Block, ...]] = {}
    s_chi = set()
    for l in interval:
        res = table.restriction_map(h, l) if l != h else None
        conj = table.conjugation_map(l)
        groups: Dict[FrozenSet[int], List[int]] = {}
        for tau in fiber:
            j = int(res[tau]) if res is not None else tau
            groups.setdefault(frozenset((j, int(conj[j]))), []).append(tau)
        partitions[l] = tuple(sorted((frozenset(b) for b in groups.values()), key=min))
        m = int(lattice.meet[k, l])
        restricted = chi if m == k else int(table.restriction_map(k, m)[chi])
        if restricted == 0:
            s_chi.add(l)

    leq = lattice.leq
    refinement = equality = True
    small = True
    for l in interval:
        for m in interval:
            if m == l:
                continue
            if leq[m, l]:
                if not _refines(partitions[l], partitions[m]):
                    refinement = False
                if l in s_chi and partitions[l] != partitions[m]:
                    equality = False
            # any two distinct partitions in the interval, comparable or not
            if partitions[l] != partitions[m]:
                for block in partitions[l]:
                    for other in partitions[m]:
                        if len(block & other) > 1:
                            small = False

    block_size = all(len(b) <= 2 for blocks in partitions.values() for b in blocks)
    discrete = all(all(len(b) == 1 for b in partitions[l]) for l in interval if l not in s_chi)

    unique_singleton = True
    for l in interval:
        if l not in s_chi:
            continue
        res = table.restriction_map(h, l) if l != h else None
        trivial_on_l = [tau for tau in fiber if (int(res[tau]) if res is not None else tau) == 0]
        singletons = [b for b in partitions[l] if len(b) == 1]
        if len(trivial_on_l) != 1 or singletons != [frozenset(trivial_on_l)]:
            unique_singleton = False

    claims = {
        "refinement": refinement,
        "equality_in_s_chi": equality,
        "block_size": block_size,
        "discrete_outside_s_chi": discrete,
        "unique_singleton": unique_singleton,
        "small_intersections": small,
    }
    return PartitionStructure(h, k, chi, fiber, partitions, frozenset(s_chi), claims)
