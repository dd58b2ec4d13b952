"""Clusteredness of diagrams and the sampling step of the rank-two construction.

A diagram D (conjugation-invariant, never containing a trivial character) is
C-clustered when |J[D]_K^H(chi)| >= C^rk(K, H) for every K < H in a p-group.
It is enough to look at the covers K < H of index p.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..characters.dual import CharacterTable
from ..engine.diagrams import Diagram
from ..engine.inductors import ComplementInductor
from ..groups.abelian import prime_power_exponent
from ..groups.lattice import SubgroupLattice, rank_of_pair
from ..utils.helpers import iter_bits
from ..utils.logger import get_logger
from ..utils.validators import ClusteringError, ConstructionError

logger = get_logger(__name__)


def _prime(table: CharacterTable) -> int:
    if not table.group.is_p_group:
        raise ConstructionError(f"{table.group.label} is not a p-group", "group")
    return table.group.primes[0]


def index_p_pairs(table: CharacterTable) -> List[Tuple[int, int]]:
    """Pairs K < H with [H : K] = p."""
    p = _prime(table)
    lattice = table.lattice
    return [(k, h) for k, h in lattice.strict_pairs() if lattice[h].order == p * lattice[k].order]


def clusteredness(diagram: Diagram) -> int:
    """min |J[D]_K^H(chi)| over index-p pairs and characters of K (p for the empty diagram)."""
    table = diagram.table
    inductor = ComplementInductor(table, diagram)
    best = None
    for k, h in index_p_pairs(table):
        for i in range(table.size(k)):
            size = inductor.image(k, h, i).bit_count()
            if best is None or size < best:
                best = size
    return best if best is not None else _prime(table)


def cluster_profile(diagram: Diagram) -> Dict[int, int]:
    """rank i -> min |J[D]_K^H(chi)| over pairs of rank i."""
    table = diagram.table
    p = _prime(table)
    inductor = ComplementInductor(table, diagram)
    profile: Dict[int, int] = {}
    for k, h in table.lattice.strict_pairs():
        rank = rank_of_pair(table.lattice, k, h, p)
        for i in range(table.size(k)):
            size = inductor.image(k, h, i).bit_count()
            profile[rank] = min(profile.get(rank, size), size)
    return dict(sorted(profile.items()))


def sample_dt(diagram: Diagram, layer: Iterable[int], rng: np.random.Generator) -> Diagram:
    """D^T: for each H in T add a uniformly chosen tau in J[D]_1^H(1) minus 1_H, and its conjugate.

    Raises:
        ClusteringError: If D is not 2-clustered
    """
    table = diagram.table
    if clusteredness(diagram) < 2:
        raise ClusteringError("sampling needs a 2-clustered diagram")
    inductor = ComplementInductor(table, diagram)
    bottom = table.lattice.bottom
    values = list(diagram.values)
    for h in sorted(set(int(x) for x in layer)):
        if h == bottom:
            continue
        pool = list(iter_bits(inductor.image(bottom, h, 0) & ~1))
        if not pool:
            raise ClusteringError(f"no character to sample at subgroup {h}")
        tau = pool[int(rng.integers(len(pool)))]
        values[h] |= (1 << tau) | (1 << int(table.conjugation_map(h)[tau]))
    return Diagram(table, tuple(values))


@dataclass(frozen=True)
class InductivePropsReport:
    """Properties of D^T relative to D and T, each with its first counterexample."""

    gal_invariant_no_trivial: bool
    new_in_layer: bool
    restriction_disjoint: bool
    witness: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return self.gal_invariant_no_trivial and self.new_in_layer and self.restriction_disjoint


def check_inductive_props(diagram: Diagram, extended: Diagram, layer: Iterable[int]) -> InductivePropsReport:
    """Check the three properties a sampled D^T must have.

    D^T is conjugation-invariant with no trivial characters, D^T(H) grows for
    every nontrivial H in T, and the new part of D^T(H) restricts to K away from
    D(K) for every 1 != K <= H.
    """
    table = extended.table
    lattice = table.lattice
    bottom = lattice.bottom
    layer = sorted(set(int(x) for x in layer) - {bottom})
    gal_bad = extended.gal_violation()
    trivial_bad = next((h for h, v in enumerate(extended.values) if v & 1), None)
    if gal_bad is not None or trivial_bad is not None:
        bad = gal_bad if gal_bad is not None else trivial_bad
        return InductivePropsReport(False, True, True, (bad,))
    for h in layer:
        if extended.values[h] & ~diagram.values[h] == 0:
            return InductivePropsReport(True, False, True, (h,))
    for h in layer:
        fresh = extended.values[h] & ~diagram.values[h]
        for k in lattice.below(h):
            k = int(k)
            if k != bottom and table.restrict_bits(fresh, h, k) & diagram.values[k]:
                return InductivePropsReport(True, True, False, (k, h))
    return InductivePropsReport(True, True, True)


def divisor_sum(lattice: SubgroupLattice, subgroups: Iterable[int], k: int = 1) -> Fraction:
    """Sum of 1/|H|^k over the given subgroups, exactly."""
    return sum((Fraction(1, lattice[int(h)].order ** k) for h in subgroups), Fraction(0))


@dataclass(frozen=True)
class BoundCheck:
    name: str
    value: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.value <= self.bound


def divisor_sum_bounds(lattice: SubgroupLattice, p: int, powers: Sequence[int] = (1, 2, 3)) -> List[BoundCheck]:
    """Layer-count and divisor-sum bounds for a rank-two p-group of order p^n.

    Each layer of order p^i has at most 2p^i members, so its k-th divisor sum is
    at most 2p^{i(1-k)}; the sum over nontrivial subgroups is at most 2n for
    k = 1 and at most 3p^{1-k} for k >= 2 when p >= 3.

    Raises:
        ConstructionError: If the group is not a p-group of rank at most two
    """
    group = lattice.group
    if not group.is_p_group or group.primes[0] != p or lattice.p_rank(p) > 2:
        raise ConstructionError(f"{group.label} is not a p-group of rank <= 2 for p = {p}", "group")
    n = prime_power_exponent(group.order, p)
    nontrivial = [h for h in range(len(lattice)) if h != lattice.bottom]
    checks = []
    for i in range(1, n + 1):
        layer = lattice.layer(p ** i)
        checks.append(BoundCheck(f"count[{i}]", Fraction(len(layer)), Fraction(2 * p ** i)))
        for k in powers:
            checks.append(BoundCheck(f"layer[{i}]^{k}", divisor_sum(lattice, layer, k),
                                     2 * Fraction(p) ** (i * (1 - k))))
    checks.append(BoundCheck("total^1", divisor_sum(lattice, nontrivial, 1), Fraction(2 * n)))
    if p >= 3:
        for k in powers:
            if k >= 2:
                checks.append(BoundCheck(f"total^{k}", divisor_sum(lattice, nontrivial, k),
                                         3 * Fraction(p) ** (1 - k)))
    return checks
