"""Finite Abelian groups given as explicit products of cyclic groups."""

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

import numpy as np

from ..utils.validators import GroupSpecError

_FACTOR = re.compile(r"^C(\d+)$")


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division (desk-scale integers only)."""
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power_exponent(n: int, p: int) -> int:
    """Return k with n = p^k, or -1 when n is not a power of p."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else -1


@dataclass(frozen=True)
class PrimaryPart:
    """The p-primary part of a group: which factors p divides and the part's order."""

    prime: int
    indices: Tuple[int, ...]
    order: int

    @property
    def exponent(self) -> int:
        """log_p of the part's order."""
        return prime_power_exponent(self.order, self.prime)


@dataclass(frozen=True)
class GroupSpec:
    """The group C_{d_1} x ... x C_{d_k}; elements are residue tuples."""

    orders: Tuple[int, ...]

    def __post_init__(self):
        if not self.orders:
            raise GroupSpecError("at least one cyclic factor is required", "group")
        for d in self.orders:
            if not isinstance(d, int) or d < 2:
                raise GroupSpecError(f"cyclic factor order must be >= 2, got {d}", "group")

    @property
    def rank(self) -> int:
        """Number of cyclic factors as given (not the minimal generating set size)."""
        return len(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @property
    def label(self) -> str:
        return "x".join(f"C{d}" for d in self.orders)

    @cached_property
    def primary_parts(self) -> Tuple[PrimaryPart, ...]:
        parts = []
        for p in sorted(factorize(self.order)):
            indices = tuple(i for i, d in enumerate(self.orders) if d % p == 0)
            part_order = math.prod(p ** factorize(self.orders[i])[p] for i in indices)
            parts.append(PrimaryPart(prime=p, indices=indices, order=part_order))
        return tuple(parts)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(part.prime for part in self.primary_parts)

    def part(self, p: int) -> PrimaryPart:
        for part in self.primary_parts:
            if part.prime == p:
                return part
        raise GroupSpecError(f"{p} does not divide |G| = {self.order}", "prime")

    @property
    def is_p_group(self) -> bool:
        return len(self.primary_parts) == 1

    def minimal_rank(self) -> int:
        """Size of a minimal generating set: the largest p-rank over all primes."""
        return max(len(part.indices) for part in self.primary_parts)

    @cached_property
    def elements(self) -> np.ndarray:
        """All elements, one row per element, in lexicographic order."""
        grids = np.indices(self.orders).reshape(len(self.orders), -1).T
        return np.ascontiguousarray(grids, dtype=np.int64)

    def encode(self, coords) -> np.ndarray:
        """Flat (lexicographic) index of one or more coordinate rows."""
        arr = np.asarray(coords, dtype=np.int64)
        return np.ravel_multi_index(tuple(np.mod(arr, self.orders).T), self.orders)

    def decode(self, code: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in np.unravel_index(int(code), self.orders))

    def element_order(self, coords) -> int:
        return math.lcm(*(d // math.gcd(int(x), d) for x, d in zip(coords, self.orders)))

    def __str__(self) -> str:
        return self.label


def parse_group(spec: str) -> GroupSpec:
    """Parse a group spec of the form ``C<int>(xC<int>)*``.

    Raises:
        GroupSpecError: On a syntax error or a factor of order < 2
    """
    if not isinstance(spec, str) or not spec.strip():
        raise GroupSpecError("empty group spec", "group")
    orders = []
    for token in spec.strip().split("x"):
        match = _FACTOR.match(token)
        if not match:
            raise GroupSpecError(f"cannot parse factor '{token}' in '{spec}' (expected C<int>(xC<int>)*)", "group")
        orders.append(int(match.group(1)))
    return GroupSpec(tuple(orders))


def _partitions(n: int, largest: int = None) -> List[Tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            result.append((first,) + rest)
    return result


def abelian_groups_of_order(n: int) -> List[GroupSpec]:
    """One group per isomorphism type of Abelian groups of order n (elementary divisor form)."""
    if n < 2:
        return []
    per_prime = []
    for p, a in sorted(factorize(n).items()):
        per_prime.append([tuple(p ** k for k in partition) for partition in _partitions(a)])
    groups = []
    for combo in itertools.product(*per_prime):
        groups.append(GroupSpec(tuple(d for block in combo for d in block)))
    return sorted(groups, key=lambda g: (len(g.orders), g.orders))
