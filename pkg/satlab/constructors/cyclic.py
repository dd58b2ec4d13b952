"""Explicit tight pairs for cyclic p-groups with p >= 5."""

from typing import Optional

import numpy as np

from ..characters.dual import CharacterTable
from ..engine.diagrams import Diagram
from ..engine.inductors import SectionInductor, residue
from ..engine.tight import TightPair, make_tight_pair
from ..groups.abelian import GroupSpec, is_prime
from ..groups.lattice import enumerate_subgroups
from ..utils.helpers import iter_bits
from ..utils.logger import get_logger
from ..utils.validators import ConstructionError

logger = get_logger(__name__)

MIN_PRIME = 5


def cyclic_tight_pair_on(table: CharacterTable, p: int, mode: str = "exhaustive",
                         rng: Optional[np.random.Generator] = None) -> TightPair:
    """Tight pair on the cyclic p-part of the group of ``table``.

    Along the chain 1 = H_0 < H_1 < ... < H_n, D(H_0) = {1} and
    D(H_i) = {1, tau_i, conj tau_i} with tau_i the least character index in the
    fiber of 1 over H_{i-1} that avoids Res_J(H_i). J is the section sub-inductor.

    Raises:
        ConstructionError: If p < 5, p does not divide |G|, or the p-part is not cyclic
    """
    if not is_prime(p) or p < MIN_PRIME:
        raise ConstructionError(f"cyclic construction needs a prime p >= {MIN_PRIME}, got {p}", "p")
    if p not in table.group.primes:
        raise ConstructionError(f"{p} does not divide |G| = {table.group.order}", "p")
    if table.lattice.p_rank(p) != 1:
        raise ConstructionError(f"the {p}-part of {table.group.label} is not cyclic", "group")

    inductor = SectionInductor(table, primes=[p])
    chain = inductor.chain
    values = {chain[0]: 1}
    for lower, upper in zip(chain, chain[1:]):
        candidates = table.fibers(lower, upper)[0] & ~residue(inductor, upper).bits
        tau = next(iter_bits(candidates), None)
        if tau is None:
            raise ConstructionError(f"no character escapes the residue at subgroup {upper}", "group")
        values[upper] = 1 | (1 << tau) | (1 << int(table.conjugation_map(upper)[tau]))
    diagram = Diagram.from_mapping(table, values)
    logger.debug(f"Cyclic tight pair on the {p}-part of {table.group.label}: {values}")
    return make_tight_pair(diagram, inductor, mode=mode, rng=rng)


def cyclic_tight_pair(p: int, n: int, mode: str = "exhaustive") -> TightPair:
    """Tight pair on C_{p^n}.

    Raises:
        ConstructionError: If p < 5 or n < 1
    """
    if n < 1:
        raise ConstructionError(f"exponent must be >= 1, got {n}", "n")
    if not is_prime(p) or p < MIN_PRIME:
        raise ConstructionError(f"cyclic construction needs a prime p >= {MIN_PRIME}, got {p}", "p")
    table = CharacterTable(enumerate_subgroups(GroupSpec((p ** n,))))
    return cyclic_tight_pair_on(table, p, mode=mode)
