"""Character groups of all subgroups, as quotients of the dual of G.

The dual of G = C_{d_1} x ... x C_{d_k} is identified with Z_{d_1} x ... x Z_{d_k}
through the pairing <a, x> = sum(a_i x_i / d_i) mod 1. A character of H <= G is the
coset of a representative a modulo the annihilator of H; its canonical
representative is the lexicographically least member of the coset. Two
representatives agree on H exactly when they agree on the generators of H, so
each coset is keyed by the vector of pairing numerators on those generators.

Character subsets are Python-int bitsets over the canonical enumeration of
each H-hat; restriction, induction and conjugation act on those bitsets.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from ..groups.lattice import SubgroupLattice
from ..utils.helpers import bits_from_indices, iter_bits
from ..utils.validators import SubgroupRelationError, ValidationError


@dataclass(frozen=True)
class CharRef:
    """A character of subgroup ``subgroup_id`` (index in the canonical enumeration)."""

    subgroup_id: int
    index: int
    rep: Tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.index == 0


@dataclass(frozen=True)
class CharSet:
    """A subset of the character group of one subgroup, stored as a bitset."""

    subgroup_id: int
    bits: int

    def __contains__(self, item: Union[int, CharRef]) -> bool:
        if isinstance(item, CharRef):
            if item.subgroup_id != self.subgroup_id:
                return False
            item = item.index
        return bool(self.bits >> item & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "CharSet") -> None:
        if other.subgroup_id != self.subgroup_id:
            raise ValidationError(
                f"character sets live on different subgroups ({self.subgroup_id} vs {other.subgroup_id})", "charset")

    def __or__(self, other: "CharSet") -> "CharSet":
        self._check(other)
        return CharSet(self.subgroup_id, self.bits | other.bits)

    def __and__(self, other: "CharSet") -> "CharSet":
        self._check(other)
        return CharSet(self.subgroup_id, self.bits & other.bits)

    def __sub__(self, other: "CharSet") -> "CharSet":
        self._check(other)
        return CharSet(self.subgroup_id, self.bits & ~other.bits)

    def issubset(self, other: "CharSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def indices(self) -> List[int]:
        return list(iter_bits(self.bits))


class CharacterTable:
    """Characters of every subgroup of a lattice, with the maps between them."""

    def __init__(self, lattice: SubgroupLattice):
        self.lattice = lattice
        self.group = lattice.group
        self._dual = self.group.elements
        self._exponent = self.group.exponent
        self._weights = np.array([self._exponent // d for d in self.group.orders], dtype=np.int64)
        self._index_of: Dict[int, np.ndarray] = {}
        self._reps: Dict[int, np.ndarray] = {}
        self._restriction: Dict[Tuple[int, int], np.ndarray] = {}
        self._fibers: Dict[Tuple[int, int], List[int]] = {}
        self._conjugation: Dict[int, np.ndarray] = {}

    # -- canonical enumeration -------------------------------------------------

    def _build(self, h: int) -> None:
        subgroup = self.lattice[h]
        n = len(self._dual)
        if not subgroup.generators:
            self._index_of[h] = np.zeros(n, dtype=np.int64)
            self._reps[h] = np.zeros(1, dtype=np.int64)
            return
        gens = np.array(subgroup.generators, dtype=np.int64)
        keys = ((self._dual * self._weights) @ gens.T) % self._exponent
        _, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
        inverse = inverse.reshape(-1)
        order = np.argsort(first)
        rank = np.empty_like(order)
        rank[order] = np.arange(len(order))
        if len(first) != subgroup.order:
            raise ValidationError(
                f"dual of subgroup {h} has {len(first)} characters, expected {subgroup.order}", "characters")
        self._index_of[h] = rank[inverse]
        self._reps[h] = first[order]

    def index_of(self, h: int) -> np.ndarray:
        """Map from flat dual-element code to character index at H."""
        if h not in self._index_of:
            self._build(h)
        return self._index_of[h]

    def reps(self, h: int) -> np.ndarray:
        """Flat codes of the canonical representatives of H-hat, in index order."""
        if h not in self._reps:
            self._build(h)
        return self._reps[h]

    def size(self, h: int) -> int:
        return self.lattice[h].order

    def characters(self, h: int) -> List[CharRef]:
        """All characters of H in canonical order; index 0 is trivial."""
        return [CharRef(h, i, self.group.decode(int(code))) for i, code in enumerate(self.reps(h))]

    def char(self, h: int, index: int) -> CharRef:
        return CharRef(h, index, self.group.decode(int(self.reps(h)[index])))

    def char_from_rep(self, h: int, rep: Sequence[int]) -> CharRef:
        index = int(self.index_of(h)[int(self.group.encode(rep))])
        return self.char(h, index)

    def trivial(self, h: int) -> CharRef:
        return self.char(h, 0)

    def pairing(self, a: Sequence[int], x: Sequence[int]) -> Fraction:
        """<a, x> = sum(a_i x_i / d_i) mod 1, exactly."""
        total = sum(Fraction(int(ai) * int(xi), d) for ai, xi, d in zip(a, x, self.group.orders))
        return total - (total.numerator // total.denominator)

    def annihilator(self, h: int) -> List[Tuple[int, ...]]:
        """All dual elements that pair trivially with H."""
        return [self.group.decode(int(c)) for c in np.flatnonzero(self.index_of(h) == 0)]

    # -- bit-level maps -------------------------------------------------------

    def _require_leq(self, k: int, h: int) -> None:
        if not self.lattice.is_leq(k, h):
            raise SubgroupRelationError(f"subgroup {k} is not contained in subgroup {h}", "pair")

    def restriction_map(self, h: int, k: int) -> np.ndarray:
        """Array sending each character index of H to its restriction's index at K."""
        key = (h, k)
        if key not in self._restriction:
            self._require_leq(k, h)
            self._restriction[key] = self.index_of(k)[self.reps(h)]
        return self._restriction[key]

    def fibers(self, k: int, h: int) -> List[int]:
        """For each character of K, the bitset of characters of H restricting to it."""
        key = (k, h)
        if key not in self._fibers:
            res = self.restriction_map(h, k)
            fib = [0] * self.size(k)
            for t, j in enumerate(res.tolist()):
                fib[j] |= 1 << t
            self._fibers[key] = fib
        return self._fibers[key]

    def conjugation_map(self, h: int) -> np.ndarray:
        if h not in self._conjugation:
            negated = self.group.encode(-self._dual[self.reps(h)])
            self._conjugation[h] = self.index_of(h)[np.atleast_1d(negated)]
        return self._conjugation[h]

    def full_bits(self, h: int) -> int:
        return (1 << self.size(h)) - 1

    def restrict_bits(self, bits: int, h: int, k: int) -> int:
        if h == k:
            return bits
        res = self.restriction_map(h, k)
        if bits == self.full_bits(h):
            return self.full_bits(k)
        out = 0
        for i in iter_bits(bits):
            out |= 1 << int(res[i])
        return out

    def induce_bits(self, bits: int, k: int, h: int) -> int:
        if h == k:
            return bits
        fib = self.fibers(k, h)
        if bits == self.full_bits(k):
            return self.full_bits(h)
        out = 0
        for i in iter_bits(bits):
            out |= fib[i]
        return out

    def conj_bits(self, bits: int, h: int) -> int:
        conj = self.conjugation_map(h)
        out = 0
        for i in iter_bits(bits):
            out |= 1 << int(conj[i])
        return out

    # -- public operations ----------------------------------------------------

    def charset(self, h: int, indices: Iterable[int] = ()) -> CharSet:
        return CharSet(h, bits_from_indices(indices))

    def charset_from_reps(self, h: int, reps: Iterable[Sequence[int]]) -> CharSet:
        index = self.index_of(h)
        return CharSet(h, bits_from_indices(int(index[int(self.group.encode(r))]) for r in reps))

    def full(self, h: int) -> CharSet:
        return CharSet(h, self.full_bits(h))

    def empty(self, h: int) -> CharSet:
        return CharSet(h, 0)

    def reps_of(self, s: CharSet) -> List[Tuple[int, ...]]:
        reps = self.reps(s.subgroup_id)
        return [self.group.decode(int(reps[i])) for i in s]

    def restrict(self, chi: CharRef, k: int) -> CharRef:
        """Restriction of a single character to K <= H."""
        index = int(self.restriction_map(chi.subgroup_id, k)[chi.index])
        return self.char(k, index)

    def restrict_set(self, s: CharSet, k: int) -> CharSet:
        self._require_leq(k, s.subgroup_id)
        return CharSet(k, self.restrict_bits(s.bits, s.subgroup_id, k))

    def induce_set(self, s: CharSet, h: int) -> CharSet:
        """Preimage of ``s`` under restriction from H to K."""
        self._require_leq(s.subgroup_id, h)
        return CharSet(h, self.induce_bits(s.bits, s.subgroup_id, h))

    def conjugate(self, chi: CharRef) -> CharRef:
        return self.char(chi.subgroup_id, int(self.conjugation_map(chi.subgroup_id)[chi.index]))

    def conjugate_set(self, s: CharSet) -> CharSet:
        return CharSet(s.subgroup_id, self.conj_bits(s.bits, s.subgroup_id))

    def conj_close(self, s: CharSet) -> CharSet:
        return s | self.conjugate_set(s)

    def is_gal_invariant(self, s: CharSet) -> bool:
        return self.conj_bits(s.bits, s.subgroup_id) == s.bits

    def is_universe(self, s: CharSet) -> bool:
        """True iff ``s`` contains the trivial character and is conjugation-closed."""
        return bool(s.bits & 1) and self.is_gal_invariant(s)

    def self_conjugate(self, h: int) -> List[int]:
        conj = self.conjugation_map(h)
        return [i for i in range(self.size(h)) if int(conj[i]) == i]
