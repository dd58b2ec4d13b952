"""Subgroup lattices of finite Abelian groups.

Subgroups are enumerated inside each primary part by closing sums of cyclic
subgroups, then combined across the coprime parts (every subgroup of a
coprime product is a product of subgroups of the factors). Subgroups are
stored as bitmasks over the lexicographic element codes, which makes
inclusion and intersection single integer operations.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .abelian import GroupSpec, factorize, prime_power_exponent
from ..utils.helpers import bits_from_indices, iter_bits
from ..utils.logger import get_logger
from ..utils.validators import BudgetExceededError, SubgroupRelationError

logger = get_logger(__name__)

DEFAULT_MAX_ELEMENTS = 10_000
DEFAULT_MAX_SUBGROUPS = 5_000


@dataclass(frozen=True)
class Subgroup:
    """A subgroup with its canonical id, element set and a small generating set."""

    id: int
    order: int
    elements: Tuple[Tuple[int, ...], ...]
    generators: Tuple[Tuple[int, ...], ...]
    mask: int = field(compare=False, repr=False)

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, element) -> bool:
        return tuple(int(x) for x in element) in self.element_set


@dataclass
class _Candidate:
    codes: np.ndarray
    generators: Tuple[Tuple[int, ...], ...]


def _element_orders(group: GroupSpec) -> np.ndarray:
    elems = group.elements
    orders = np.asarray(group.orders, dtype=np.int64)
    per_coord = orders // np.gcd(elems, orders)
    return np.lcm.reduce(per_coord, axis=1)


def _sum_codes(group: GroupSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    elems = group.elements
    total = elems[a][:, None, :] + elems[b][None, :, :]
    return np.unique(group.encode(total.reshape(-1, len(group.orders))))


def _cyclic_codes(group: GroupSpec, code: int, order: int) -> np.ndarray:
    g = group.elements[code]
    multiples = np.arange(order, dtype=np.int64)[:, None] * g[None, :]
    return np.unique(group.encode(multiples))


def _mask(codes: np.ndarray) -> int:
    return bits_from_indices(codes.tolist())


def _enumerate_part(group: GroupSpec, member: np.ndarray, element_orders: np.ndarray,
                    max_subgroups: int) -> List[_Candidate]:
    """All subgroups of the part made of the elements flagged in ``member``."""
    cyclics: Dict[int, _Candidate] = {}
    for code in np.flatnonzero(member):
        if code == 0:
            continue
        codes = _cyclic_codes(group, int(code), int(element_orders[code]))
        m = _mask(codes)
        if m not in cyclics:
            cyclics[m] = _Candidate(codes, (group.decode(int(code)),))

    trivial = _Candidate(np.zeros(1, dtype=np.int64), ())
    found: Dict[int, _Candidate] = {1: trivial}
    queue = [1]
    head = 0
    while head < len(queue):
        current_mask = queue[head]
        head += 1
        current = found[current_mask]
        for cyc_mask, cyc in cyclics.items():
            if cyc_mask & current_mask == cyc_mask:
                continue
            codes = _sum_codes(group, current.codes, cyc.codes)
            m = _mask(codes)
            if m in found:
                continue
            found[m] = _Candidate(codes, current.generators + cyc.generators)
            queue.append(m)
            if len(found) > max_subgroups:
                raise BudgetExceededError("subgroups", max_subgroups, len(found))
    return list(found.values())


class SubgroupLattice:
    """All subgroups of a group in canonical order, with leq/meet/join tables.

    Canonical order is by (order, sorted element list); id 0 is the trivial
    subgroup and the last id is the whole group.
    """

    def __init__(self, group: GroupSpec, subgroups: Sequence[Subgroup]):
        self.group = group
        self.subgroups: Tuple[Subgroup, ...] = tuple(subgroups)
        n = len(self.subgroups)
        self.orders = np.array([s.order for s in self.subgroups], dtype=np.int64)
        self._by_mask = {s.mask: s.id for s in self.subgroups}

        leq = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(self.subgroups):
            for j in range(i, n):
                b = self.subgroups[j]
                if b.order % a.order == 0 and a.mask & b.mask == a.mask:
                    leq[i, j] = True
        self.leq = leq
        self.leq.setflags(write=False)

        meet = np.zeros((n, n), dtype=np.int64)
        join = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            lower = leq[:, a][None, :] & leq.T
            meet[a] = n - 1 - np.argmax(lower[:, ::-1], axis=1)
            upper = leq[a][None, :] & leq
            join[a] = np.argmax(upper, axis=1)
        self.meet = meet
        self.join = join
        self.meet.setflags(write=False)
        self.join.setflags(write=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __getitem__(self, sid: int) -> Subgroup:
        return self.subgroups[sid]

    def __iter__(self):
        return iter(self.subgroups)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.subgroups) - 1

    def is_leq(self, k: int, h: int) -> bool:
        return bool(self.leq[k, h])

    def lookup_mask(self, mask: int) -> Optional[int]:
        return self._by_mask.get(mask)

    def find(self, elements: Iterable[Sequence[int]]) -> int:
        """Id of the subgroup with exactly the given element set."""
        codes = [int(self.group.encode(e)) for e in elements]
        sid = self.lookup_mask(bits_from_indices(codes))
        if sid is None:
            raise SubgroupRelationError("element set is not a subgroup", "elements")
        return sid

    def generated(self, generators: Iterable[Sequence[int]]) -> int:
        """Id of the subgroup generated by the given elements."""
        codes = np.zeros(1, dtype=np.int64)
        for g in generators:
            code = int(self.group.encode(g))
            order = self.group.element_order(self.group.decode(code))
            codes = _sum_codes(self.group, codes, _cyclic_codes(self.group, code, order))
        return self._by_mask[_mask(codes)]

    def element_codes(self, sid: int) -> List[int]:
        return list(iter_bits(self.subgroups[sid].mask))

    def below(self, h: int) -> np.ndarray:
        """Ids K with K <= H, ascending."""
        return np.flatnonzero(self.leq[:, h])

    def above(self, k: int) -> np.ndarray:
        """Ids H with K <= H, ascending."""
        return np.flatnonzero(self.leq[k, :])

    def strict_pairs(self) -> List[Tuple[int, int]]:
        """All (K, H) with K < H, sorted by (K, H)."""
        ks, hs = np.nonzero(self.leq)
        return [(int(k), int(h)) for k, h in zip(ks, hs) if k != h]

    def maximal_subgroups(self, h: int) -> List[int]:
        """Ids K < H with nothing strictly between K and H."""
        proper = [int(k) for k in self.below(h) if k != h]
        return [k for k in proper if not any(self.leq[k, m] and m != k for m in proper)]

    def open_interval(self, k: int, h: int) -> np.ndarray:
        """(K, H] = {L <= H : L not <= K}."""
        return np.flatnonzero(self.leq[:, h] & ~self.leq[:, k])

    def layer(self, order: int) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.orders == order)]

    @cached_property
    def _element_orders(self) -> np.ndarray:
        return _element_orders(self.group)

    def p_rank(self, p: int) -> int:
        """Rank of the p-primary part: log_p of the number of elements killed by p."""
        count = int(np.sum(np.all((self.group.elements * p) % np.asarray(self.group.orders) == 0, axis=1)))
        return prime_power_exponent(count, p)

    def part_top(self, primes: Iterable[int]) -> int:
        """The subgroup G_P of elements whose order involves only primes in P."""
        allowed = set(primes)
        orders = self._element_orders
        keep = np.ones(len(orders), dtype=bool)
        for p in factorize(self.group.order):
            if p not in allowed:
                keep &= orders % p != 0
        return self._by_mask[_mask(np.flatnonzero(keep))]

    def component(self, h: int, primes: Iterable[int]) -> int:
        """H meet G_P."""
        return int(self.meet[h, self.part_top(primes)])

    def label(self, sid: int) -> str:
        return f"#{sid} (|H|={self.subgroups[sid].order})"


def enumerate_subgroups(group: GroupSpec, max_elements: int = DEFAULT_MAX_ELEMENTS,
                        max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> SubgroupLattice:
    """Enumerate every subgroup of ``group`` exactly once.

    Raises:
        BudgetExceededError: If |G| or the subgroup count exceeds its budget
    """
    if group.order > max_elements:
        raise BudgetExceededError("group elements", max_elements, group.order)

    element_orders = _element_orders(group)
    combined = [_Candidate(np.zeros(1, dtype=np.int64), ())]
    for part in group.primary_parts:
        member = np.array([prime_power_exponent(int(o), part.prime) >= 0 for o in element_orders])
        part_subgroups = _enumerate_part(group, member, element_orders, max_subgroups)
        if len(combined) * len(part_subgroups) > max_subgroups:
            raise BudgetExceededError("subgroups", max_subgroups, len(combined) * len(part_subgroups))
        combined = [
            _Candidate(_sum_codes(group, a.codes, b.codes), a.generators + b.generators)
            for a in combined
            for b in part_subgroups
        ]

    combined.sort(key=lambda c: (len(c.codes), tuple(c.codes.tolist())))
    subgroups = [
        Subgroup(
            id=i,
            order=len(c.codes),
            elements=tuple(group.decode(int(code)) for code in c.codes),
            generators=c.generators,
            mask=_mask(c.codes),
        )
        for i, c in enumerate(combined)
    ]
    logger.debug(f"Enumerated {len(subgroups)} subgroups of {group.label}")
    return SubgroupLattice(group, subgroups)


def rank_of_pair(lattice: SubgroupLattice, k: int, h: int, p: Optional[int] = None) -> int:
    """log_p [H:K] for K <= H.

    Raises:
        SubgroupRelationError: If K is not <= H or the index is not a prime power
    """
    if not lattice.is_leq(k, h):
        raise SubgroupRelationError(f"subgroup {k} is not contained in subgroup {h}", "pair")
    index = lattice[h].order // lattice[k].order
    if index == 1:
        return 0
    primes = factorize(index)
    if len(primes) != 1 or (p is not None and p not in primes):
        raise SubgroupRelationError(f"index {index} is not a power of {p or 'a prime'}", "pair")
    return next(iter(primes.values()))
