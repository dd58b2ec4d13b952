"""Universes on G as subsets of conjugation orbits of nontrivial characters."""

from typing import List

from ..characters.dual import CharacterTable, CharSet
from ..utils.helpers import iter_bits
from ..utils.validators import ValidationError


class OrbitIndex:
    """Conjugation orbits of G-hat minus the trivial character, sorted by least index.

    Bit j of an orbit mask selects orbit j; a universe is the trivial character
    plus the selected orbits.
    """

    def __init__(self, table: CharacterTable):
        self.table = table
        top = table.lattice.top
        conj = table.conjugation_map(top)
        orbits = []
        seen = 1
        for i in range(1, table.size(top)):
            if seen >> i & 1:
                continue
            bits = (1 << i) | (1 << int(conj[i]))
            seen |= bits
            orbits.append(bits)
        self.orbits: List[int] = orbits
        self.top = top

    def __len__(self) -> int:
        return len(self.orbits)

    @property
    def universe_count(self) -> int:
        return 1 << len(self.orbits)

    def universe_bits(self, mask: int) -> int:
        bits = 1
        for j in iter_bits(mask):
            bits |= self.orbits[j]
        return bits

    def universe_from_mask(self, mask: int) -> CharSet:
        if not 0 <= mask < self.universe_count:
            raise ValidationError(f"orbit mask {mask} out of range", "mask")
        return CharSet(self.top, self.universe_bits(mask))

    def mask_of_universe(self, universe: CharSet) -> int:
        """Inverse of ``universe_from_mask``.

        Raises:
            ValidationError: If the set is not a universe on G
        """
        if universe.subgroup_id != self.top or not self.table.is_universe(universe):
            raise ValidationError("not a universe on G", "universe")
        return sum(1 << j for j, orbit in enumerate(self.orbits) if universe.bits & orbit)


def orbit_index(table: CharacterTable) -> OrbitIndex:
    return OrbitIndex(table)
