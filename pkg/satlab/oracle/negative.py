"""The unrealizable saturated system on (C_p)^3 and the covering-index identities behind it."""

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from .brute_force import SearchOutcome, Unrealizable, brute_force_realizable
from ..characters.dual import CharacterTable
from ..groups.abelian import GroupSpec, is_prime
from ..groups.lattice import SubgroupLattice, enumerate_subgroups
from ..transfer.systems import TransferSystem, generate_saturated, is_saturated
from ..utils.helpers import iter_bits
from ..utils.logger import get_logger, log_performance
from ..utils.validators import ValidationError

logger = get_logger(__name__)


def elementary_rank3(p: int) -> CharacterTable:
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime", "p")
    return CharacterTable(enumerate_subgroups(GroupSpec((p, p, p))))


def canonical_plane(lattice: SubgroupLattice, p: Optional[int] = None, within: Optional[int] = None) -> int:
    """First subgroup of order p^2 (below ``within`` when given) in canonical order."""
    p = p if p is not None else min(lattice.group.primes)
    for h in lattice.layer(p * p):
        if within is None or lattice.is_leq(h, within):
            return h
    raise ValidationError("no subgroup of order p^2", "group")


def negative_system(lattice: SubgroupLattice, plane: int) -> TransferSystem:
    """Least saturated system containing 1 -> H for the plane H."""
    return generate_saturated(lattice, [(lattice.bottom, plane)])


@dataclass(frozen=True)
class NegativeReport:
    p: int
    plane: int
    edges: int
    explicit_form: bool
    outcome: SearchOutcome
    elapsed_ms: float

    @property
    def unrealizable(self) -> bool:
        return isinstance(self.outcome, Unrealizable)


def verify_negative_rank3(p: int, jobs: int = 1, max_orbits: int = 22) -> NegativeReport:
    """Build the rank-3 system for p and confirm by brute force that no universe realizes it.

    The system is also checked against its explicit description: W' -> W iff
    W' = W or W <= H.
    """
    if p not in (2, 3):
        raise ValidationError("exhaustive verification is available for p in {2, 3}", "p")
    start = time.time()
    table = elementary_rank3(p)
    lattice = table.lattice
    plane = canonical_plane(lattice)
    system = negative_system(lattice, plane)
    expected = frozenset((k, h) for k, h in lattice.strict_pairs() if lattice.is_leq(h, plane))
    outcome = brute_force_realizable(system, table, max_orbits=max_orbits, jobs=jobs)
    elapsed = (time.time() - start) * 1000
    log_performance(logger, "verify_negative_rank3", elapsed, p=p, outcome=type(outcome).__name__)
    return NegativeReport(p, plane, len(system), system.edges == expected, outcome, elapsed)


@dataclass(frozen=True)
class CoveringStats:
    """Covering indices c(tau) of the sets X_L and the derived identities."""

    p: int
    plane: int
    lines: Tuple[int, ...]
    covering: Tuple[int, ...]
    fiber_sums: Tuple[int, ...]
    variances: Tuple[Fraction, ...]
    mean_variance: Fraction
    pairwise_intersections: bool

    @property
    def identities_hold(self) -> bool:
        square = self.p * self.p
        return (all(s == square for s in self.fiber_sums)
                and self.mean_variance == self.p - 1
                and self.pairwise_intersections
                and len(self.lines) == square)


def lines_off_plane(lattice: SubgroupLattice, plane: int) -> List[int]:
    p = min(lattice.group.primes)
    return [l for l in lattice.layer(p) if not lattice.is_leq(l, plane)]


def covering_stats(p: int, choices: Mapping[int, int], table: Optional[CharacterTable] = None) -> CoveringStats:
    """c(tau) = number of lines L off the plane with tau in X_L, X_L the fiber of xi_L over L.

    ``choices`` maps each line id to a character index of that line.

    Raises:
        ValidationError: If the choices do not cover exactly the lines off the plane
    """
    table = table if table is not None else elementary_rank3(p)
    lattice = table.lattice
    top = lattice.top
    plane = canonical_plane(lattice)
    lines = lines_off_plane(lattice, plane)
    if set(choices) != set(lines):
        raise ValidationError(f"expected a choice for each of the lines {lines}", "choices")
    xs = []
    for line in lines:
        xi = int(choices[line])
        if not 0 <= xi < table.size(line):
            raise ValidationError(f"character index {xi} out of range for line {line}", "choices")
        xs.append(table.fibers(line, top)[xi])

    size = table.size(top)
    covering = [0] * size
    for x in xs:
        for tau in iter_bits(x):
            covering[tau] += 1
    square = p * p
    fiber_sums, variances = [], []
    for fiber in table.fibers(plane, top):
        taus = list(iter_bits(fiber))
        fiber_sums.append(sum(covering[t] for t in taus))
        variances.append(Fraction(-square) + Fraction(sum(covering[t] ** 2 for t in taus), p))
    mean = sum(variances, Fraction(0)) / len(variances)
    pairwise = all((xs[i] & xs[j]).bit_count() == p for i in range(len(xs)) for j in range(i + 1, len(xs)))
    return CoveringStats(p, plane, tuple(lines), tuple(covering), tuple(fiber_sums),
                         tuple(variances), mean, pairwise)


def random_covering_choices(p: int, rng: np.random.Generator, table: Optional[CharacterTable] = None) -> Dict[int, int]:
    table = table if table is not None else elementary_rank3(p)
    plane = canonical_plane(table.lattice)
    return {line: int(rng.integers(table.size(line))) for line in lines_off_plane(table.lattice, plane)}


def _elementary_subgroup(lattice: SubgroupLattice, p: int) -> int:
    """First subgroup of order p^3 all of whose elements have order dividing p."""
    for h in lattice.layer(p ** 3):
        if all(lattice.group.element_order(e) in (1, p) for e in lattice[h].elements):
            return h
    raise ValidationError(f"{lattice.group.label} has {p}-rank < 3", "group")


def extend_negative_system(lattice: SubgroupLattice, p: int) -> TransferSystem:
    """Carry the rank-3 system to G through its canonical (C_p)^3 subgroup E.

    With H the canonical plane of E, the strict edges are K -> W for K < W <= H.
    The result is saturated and restricts to the rank-3 system on E.

    Raises:
        ValidationError: If G has p-rank below 3
    """
    if lattice.p_rank(p) < 3:
        raise ValidationError(f"{lattice.group.label} has {p}-rank < 3", "group")
    e = _elementary_subgroup(lattice, p)
    plane = canonical_plane(lattice, p, within=e)
    edges = frozenset((k, w) for k, w in lattice.strict_pairs() if lattice.is_leq(w, plane))
    system = TransferSystem(lattice, edges)
    if not is_saturated(system):
        raise ValidationError("extended system is not saturated", "group")
    return system
