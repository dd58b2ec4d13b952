"""Transfer systems on a subgroup lattice: validation, closures and comparison."""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np

from ..groups.lattice import SubgroupLattice
from ..utils.logger import get_logger
from ..utils.validators import TransferSystemError

logger = get_logger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class TransferSystem:
    """A transfer system, stored as its strict edges K -> H (K < H).

    Reflexive edges are implicit. Equality and hashing use the edge set only.
    """

    lattice: SubgroupLattice = field(compare=False, repr=False)
    edges: FrozenSet[Edge]

    @classmethod
    def identity(cls, lattice: SubgroupLattice) -> "TransferSystem":
        return cls(lattice, frozenset())

    @classmethod
    def maximal(cls, lattice: SubgroupLattice) -> "TransferSystem":
        return cls(lattice, frozenset(lattice.strict_pairs()))

    @classmethod
    def from_matrix(cls, lattice: SubgroupLattice, rel: np.ndarray) -> "TransferSystem":
        ks, hs = np.nonzero(rel)
        return cls(lattice, frozenset((int(k), int(h)) for k, h in zip(ks, hs) if k != h))

    def matrix(self) -> np.ndarray:
        """Boolean relation matrix, rel[K, H] meaning K -> H (reflexive included)."""
        rel = np.eye(len(self.lattice), dtype=bool)
        for k, h in self.edges:
            rel[k, h] = True
        return rel

    def __contains__(self, edge: Edge) -> bool:
        k, h = edge
        return k == h or (k, h) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def issubset(self, other: "TransferSystem") -> bool:
        return self.edges <= other.edges


@dataclass(frozen=True)
class TransferSystemReport:
    """Outcome of validating a relation; names the first violated axiom."""

    valid: bool
    axiom: Optional[str] = None
    witness: Tuple[int, ...] = ()
    message: str = ""


def validate_transfer_system(lattice: SubgroupLattice, rel: np.ndarray) -> TransferSystemReport:
    """Check that ``rel`` refines inclusion, is a partial order and is pullback-closed.

    The conjugation axiom is vacuous for Abelian groups and is not checked.
    """
    n = len(lattice)
    rel = np.asarray(rel, dtype=bool)
    if rel.shape != (n, n):
        return TransferSystemReport(False, "shape", (), f"expected {n}x{n}, got {rel.shape}")
    leq = lattice.leq

    bad = np.argwhere(rel & ~leq)
    if len(bad):
        k, h = map(int, bad[0])
        return TransferSystemReport(False, "refines-inclusion", (k, h), f"{k} -> {h} but {k} is not <= {h}")

    missing = np.flatnonzero(~np.diag(rel))
    if len(missing):
        h = int(missing[0])
        return TransferSystemReport(False, "reflexive", (h,), f"{h} -> {h} is missing")

    r = rel.astype(np.int64)
    bad = np.argwhere(((r @ r) > 0) & ~rel)
    if len(bad):
        k, h = map(int, bad[0])
        return TransferSystemReport(False, "transitive", (k, h), f"composite {k} -> {h} is missing")

    meet = lattice.meet
    for k, h in np.argwhere(rel):
        for l in lattice.below(h):
            m = meet[k, l]
            if not rel[m, l]:
                return TransferSystemReport(
                    False, "pullback", (int(k), int(h), int(l)),
                    f"{k} -> {h} and {l} <= {h} but {m} -> {l} is missing")
    return TransferSystemReport(True)


def _check_edges(lattice: SubgroupLattice, edges: Iterable[Edge]) -> List[Edge]:
    n = len(lattice)
    checked = []
    for edge in edges:
        try:
            k, h = (int(x) for x in edge)
        except (TypeError, ValueError) as e:
            raise TransferSystemError(f"malformed edge {edge!r}", "edges") from e
        if not (0 <= k < n and 0 <= h < n):
            raise TransferSystemError(f"edge {edge!r} refers to an unknown subgroup", "edges")
        if not lattice.leq[k, h]:
            raise TransferSystemError(f"edge ({k}, {h}) does not refine inclusion", "edges")
        checked.append((k, h))
    return checked


def _close(lattice: SubgroupLattice, rel: np.ndarray, saturate: bool = False) -> np.ndarray:
    """Least fixed point of transitivity + pullback (+ saturation) containing ``rel``."""
    leq = lattice.leq
    meet = lattice.meet
    rel = rel | np.eye(len(lattice), dtype=bool)
    while True:
        before = rel.copy()
        r = rel.astype(np.int64)
        rel |= (r @ r) > 0
        for k, h in np.argwhere(rel & ~np.eye(len(lattice), dtype=bool)):
            below = lattice.below(h)
            rel[meet[k, below], below] = True
            if saturate:
                rel[:, h] |= leq[k, :] & leq[:, h]
        if np.array_equal(before, rel):
            return rel


def generate_transfer_system(lattice: SubgroupLattice, edges: Iterable[Edge] = ()) -> TransferSystem:
    """Least transfer system containing ``edges``.

    Raises:
        TransferSystemError: On a malformed edge
    """
    rel = np.zeros((len(lattice), len(lattice)), dtype=bool)
    for k, h in _check_edges(lattice, edges):
        rel[k, h] = True
    return TransferSystem.from_matrix(lattice, _close(lattice, rel))


def generate_saturated(lattice: SubgroupLattice, edges: Iterable[Edge] = ()) -> TransferSystem:
    """Least saturated transfer system containing ``edges``.

    Raises:
        TransferSystemError: On a malformed edge
    """
    rel = np.zeros((len(lattice), len(lattice)), dtype=bool)
    for k, h in _check_edges(lattice, edges):
        rel[k, h] = True
    return TransferSystem.from_matrix(lattice, _close(lattice, rel, saturate=True))


def transfer_system_from_edges(lattice: SubgroupLattice, edges: Iterable[Edge]) -> TransferSystem:
    """Build a transfer system from exactly ``edges``, rejecting invalid relations.

    Raises:
        TransferSystemError: If the edges are malformed or do not form a transfer system
    """
    rel = np.eye(len(lattice), dtype=bool)
    for k, h in _check_edges(lattice, edges):
        rel[k, h] = True
    report = validate_transfer_system(lattice, rel)
    if not report.valid:
        raise TransferSystemError(f"not a transfer system ({report.axiom}): {report.message}", "edges")
    return TransferSystem.from_matrix(lattice, rel)


def is_saturated(system: TransferSystem) -> bool:
    """K -> H and K <= L <= H imply L -> H."""
    leq = system.lattice.leq
    rel = system.matrix()
    for k, h in system.edges:
        between = leq[k, :] & leq[:, h]
        if np.any(between & ~rel[:, h]):
            return False
    return True


def cofibrant_subgroups(system: TransferSystem) -> Set[int]:
    """Subgroups with no strict incoming edge."""
    targets = {h for _, h in system.edges}
    return {h for h in range(len(system.lattice)) if h not in targets}


def fibrant_subgroups(system: TransferSystem) -> Set[int]:
    """Subgroups H with H -> G."""
    top = system.lattice.top
    return {h for h in range(len(system.lattice)) if (h, top) in system}


@dataclass(frozen=True)
class TransferSystemComparison:
    contained: bool
    cofibrant_test: bool

    @property
    def consistent(self) -> bool:
        return self.contained == self.cofibrant_test


def leq_of_transfer_systems(system: TransferSystem, saturated: TransferSystem) -> TransferSystemComparison:
    """Compare R <= R' directly and through cofibrant subgroups (R' must be saturated).

    Raises:
        TransferSystemError: If the second system is not saturated
    """
    if not is_saturated(saturated):
        raise TransferSystemError("comparison target must be saturated", "saturated")
    contained = system.issubset(saturated)
    cofibrant_test = cofibrant_subgroups(saturated) <= cofibrant_subgroups(system)
    if contained != cofibrant_test:
        logger.warning("Cofibrant comparison disagrees with containment")
    return TransferSystemComparison(contained, cofibrant_test)
