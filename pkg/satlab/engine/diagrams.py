"""Diagrams of character sets, Tr(-), and the two stabilizations."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

from ..characters.dual import CharacterTable, CharSet
from ..transfer.systems import TransferSystem, validate_transfer_system
from ..utils.validators import TransferSystemError, ValidationError


@dataclass(frozen=True)
class Diagram:
    """One character subset per subgroup, stored as bitsets indexed by subgroup id."""

    table: CharacterTable = field(compare=False, repr=False)
    values: Tuple[int, ...]

    @classmethod
    def empty(cls, table: CharacterTable) -> "Diagram":
        return cls(table, (0,) * len(table.lattice))

    @classmethod
    def full(cls, table: CharacterTable) -> "Diagram":
        return cls(table, tuple(table.full_bits(h) for h in range(len(table.lattice))))

    @classmethod
    def trivial(cls, table: CharacterTable) -> "Diagram":
        """Every value is {1_H}."""
        return cls(table, (1,) * len(table.lattice))

    @classmethod
    def from_universe(cls, table: CharacterTable, universe: CharSet) -> "Diagram":
        """D_U(H) = restriction of U to H."""
        top = table.lattice.top
        if universe.subgroup_id != top:
            raise ValidationError("universe must be a character set of G", "universe")
        return cls(table, tuple(table.restrict_bits(universe.bits, top, h) for h in range(len(table.lattice))))

    @classmethod
    def from_mapping(cls, table: CharacterTable, values: Dict[int, int]) -> "Diagram":
        return cls(table, tuple(int(values.get(h, 0)) for h in range(len(table.lattice))))

    def __getitem__(self, h: int) -> CharSet:
        return CharSet(h, self.values[h])

    def __len__(self) -> int:
        return len(self.values)

    def with_value(self, h: int, bits: int) -> "Diagram":
        values = list(self.values)
        values[h] = bits
        return Diagram(self.table, tuple(values))

    def __or__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.table, tuple(a | b for a, b in zip(self.values, other.values)))

    def __and__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.table, tuple(a & b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.table, tuple(a & ~b for a, b in zip(self.values, other.values)))

    def issubset(self, other: "Diagram") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.values, other.values))

    def with_trivial(self) -> "Diagram":
        """Add 1_H to every value."""
        return Diagram(self.table, tuple(v | 1 for v in self.values))

    def restricted_to(self, subgroups: Iterable[int]) -> "Diagram":
        keep = set(subgroups)
        return Diagram(self.table, tuple(v if h in keep else 0 for h, v in enumerate(self.values)))

    def r_stability_violation(self) -> Optional[Tuple[int, int]]:
        """First (K, H) with the restriction of D(H) to K not inside D(K), else None."""
        table = self.table
        for k, h in table.lattice.strict_pairs():
            if table.restrict_bits(self.values[h], h, k) & ~self.values[k]:
                return (k, h)
        return None

    def is_r_stable(self) -> bool:
        return self.r_stability_violation() is None

    def gal_violation(self) -> Optional[int]:
        for h, v in enumerate(self.values):
            if self.table.conj_bits(v, h) != v:
                return h
        return None

    def is_gal_invariant(self) -> bool:
        return self.gal_violation() is None

    def is_universal(self) -> bool:
        return all(v & 1 for v in self.values) and self.is_gal_invariant()


def tr_of_diagram(diagram: Diagram) -> TransferSystem:
    """{K <= H : induction of D(K) to H lies inside D(H)}.

    The result is a relation in transfer-system form; it is a valid transfer
    system when the diagram comes from a universe.
    """
    table = diagram.table
    values = diagram.values
    edges = frozenset(
        (k, h) for k, h in table.lattice.strict_pairs()
        if table.induce_bits(values[k], k, h) & ~values[h] == 0
    )
    return TransferSystem(table.lattice, edges)


def tr_of_universe(table: CharacterTable, universe: CharSet) -> TransferSystem:
    """Tr(U), validated before return.

    Raises:
        TransferSystemError: If the computed relation is not a transfer system
    """
    system = tr_of_diagram(Diagram.from_universe(table, universe))
    report = validate_transfer_system(table.lattice, system.matrix())
    if not report.valid:
        raise TransferSystemError(f"Tr(U) failed {report.axiom}: {report.message}", "universe")
    return system


def r_stabilize(diagram: Diagram) -> Diagram:
    """Least R-stable diagram containing ``diagram``."""
    table = diagram.table
    lattice = table.lattice
    values = []
    for h in range(len(lattice)):
        bits = diagram.values[h]
        for k in lattice.above(h):
            if k != h:
                bits |= table.restrict_bits(diagram.values[k], int(k), h)
        values.append(bits)
    return Diagram(table, tuple(values))


def jr_stabilize(diagram: Diagram, inductor, system: TransferSystem) -> Diagram:
    """Least (J, R)-stable diagram containing ``diagram``: union of J_K^H(D(K)) over K -> H."""
    incoming: Dict[int, list] = {}
    for k, h in system.edges:
        incoming.setdefault(h, []).append(k)
    values = []
    for h, bits in enumerate(diagram.values):
        for k in incoming.get(h, ()):
            bits |= inductor.apply_bits(k, h, diagram.values[k])
        values.append(bits)
    return Diagram(diagram.table, tuple(values))
