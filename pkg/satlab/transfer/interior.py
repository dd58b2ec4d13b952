"""Interior operators on Sub(G) and their correspondence with saturated transfer systems.

The correspondence is K -> H in R iff f(H) <= K <= H. For a saturated R the
sources of edges into H form the interval [f(H), H], with f(H) the meet of all
sources.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from .systems import TransferSystem, is_saturated
from ..groups.lattice import SubgroupLattice
from ..utils.validators import InteriorOperatorError, TransferSystemError


@dataclass(frozen=True)
class InteriorOperator:
    """A monotone, decreasing, idempotent map on subgroup ids."""

    lattice: SubgroupLattice = field(compare=False, repr=False)
    values: Tuple[int, ...]

    def __post_init__(self):
        problem = interior_operator_problem(self.lattice, self.values)
        if problem:
            raise InteriorOperatorError(problem, "f")

    def __call__(self, h: int) -> int:
        return self.values[h]

    def fixed_points(self) -> List[int]:
        return [h for h, v in enumerate(self.values) if v == h]


def interior_operator_problem(lattice: SubgroupLattice, values: Iterable[int]) -> Optional[str]:
    """Describe why ``values`` is not an interior operator, or None if it is."""
    f = list(values)
    n = len(lattice)
    if len(f) != n or any(not (0 <= v < n) for v in f):
        return f"expected {n} subgroup ids"
    leq = lattice.leq
    for h in range(n):
        if not leq[f[h], h]:
            return f"not decreasing at {h}: f({h}) = {f[h]}"
        if f[f[h]] != f[h]:
            return f"not idempotent at {h}"
    for k, h in lattice.strict_pairs():
        if not leq[f[k], f[h]]:
            return f"not monotone on {k} <= {h}"
    return None


def interior_to_saturated(f: InteriorOperator) -> TransferSystem:
    lattice = f.lattice
    leq = lattice.leq
    edges = frozenset(
        (k, h) for k, h in lattice.strict_pairs() if leq[f(h), k]
    )
    return TransferSystem(lattice, edges)


def saturated_to_interior(system: TransferSystem) -> InteriorOperator:
    """Raises TransferSystemError when ``system`` is not saturated."""
    if not is_saturated(system):
        raise TransferSystemError("interior operators correspond to saturated systems only", "system")
    lattice = system.lattice
    rel = system.matrix()
    values = []
    for h in range(len(lattice)):
        sources = np.flatnonzero(rel[:, h])
        values.append(int(sources[0]))  # smallest order source = meet of all sources
    return InteriorOperator(lattice, tuple(values))


def enumerate_interior_operators(lattice: SubgroupLattice) -> Iterator[InteriorOperator]:
    """Yield every interior operator exactly once.

    Subgroups are assigned in id order, so everything below H is assigned
    before H. f(H) is either H or an already-fixed M < H, and must dominate
    f(K) for every K < H.
    """
    n = len(lattice)
    leq = lattice.leq
    below = [[int(k) for k in lattice.below(h) if k != h] for h in range(n)]
    values = [0] * n

    def visit(h: int) -> Iterator[InteriorOperator]:
        if h == n:
            yield InteriorOperator(lattice, tuple(values))
            return
        candidates = [m for m in below[h] if values[m] == m] + [h]
        for c in candidates:
            if all(leq[values[k], c] for k in below[h]):
                values[h] = c
                yield from visit(h + 1)

    yield from visit(0)


def enumerate_saturated(lattice: SubgroupLattice) -> Iterator[TransferSystem]:
    """Every saturated transfer system, through the interior-operator correspondence."""
    for f in enumerate_interior_operators(lattice):
        yield interior_to_saturated(f)


def f_S_from_layer(lattice: SubgroupLattice, subgroups: Iterable[int]) -> InteriorOperator:
    """f_S(H) = join of the members of S below H (the bottom if there are none)."""
    members = sorted(set(int(s) for s in subgroups))
    values = []
    for h in range(len(lattice)):
        current = lattice.bottom
        for s in members:
            if lattice.leq[s, h]:
                current = int(lattice.join[current, s])
        values.append(current)
    return InteriorOperator(lattice, tuple(values))
