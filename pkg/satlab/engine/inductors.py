"""Sub-inductors: maps J_K^H from characters of K to subsets of their fibers in H-hat.

Every sub-inductor is evaluated on singletons and extended by unions. Images
are cached per (K, H, character index). A sub-inductor may be supported on a
primary part G_P only; it is then defined for pairs of subgroups of G_P.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from .diagrams import Diagram
from ..characters.dual import CharacterTable, CharSet
from ..utils.helpers import bits_from_indices, iter_bits
from ..utils.logger import get_logger
from ..utils.validators import InductorError

logger = get_logger(__name__)


class SubInductor(ABC):
    """Common machinery for the four kinds of sub-inductor."""

    kind = "abstract"

    def __init__(self, table: CharacterTable, primes: Optional[Iterable[int]] = None):
        self.table = table
        self.lattice = table.lattice
        group_primes = set(table.group.primes)
        if primes is None:
            self.primes: Tuple[int, ...] = tuple(sorted(group_primes))
        else:
            self.primes = tuple(sorted(set(int(p) for p in primes)))
            extra = set(self.primes) - group_primes
            if extra:
                raise InductorError(f"primes {sorted(extra)} do not divide |G|", "primes")
        self.support_top = self.lattice.part_top(self.primes)
        self._images: Dict[Tuple[int, int, int], int] = {}

    @property
    def is_full(self) -> bool:
        """True when the sub-inductor is defined on the whole lattice."""
        return self.support_top == self.lattice.top

    def supports(self, h: int) -> bool:
        return self.lattice.is_leq(h, self.support_top)

    def support(self) -> List[int]:
        return [int(h) for h in self.lattice.below(self.support_top)]

    def pairs(self) -> List[Tuple[int, int]]:
        """Strict pairs K < H inside the support."""
        top = self.support_top
        leq = self.lattice.leq
        return [(k, h) for k, h in self.lattice.strict_pairs() if leq[h, top]]

    def _require(self, k: int, h: int) -> None:
        if not (self.supports(h) and self.lattice.is_leq(k, h)):
            raise InductorError(f"pair ({k}, {h}) is outside the support of this sub-inductor", "pair")

    @abstractmethod
    def _image(self, k: int, h: int, i: int) -> int:
        """Bits of J_K^H(chi_i) for K < H."""

    def image(self, k: int, h: int, i: int) -> int:
        if k == h:
            return 1 << i
        key = (k, h, i)
        cached = self._images.get(key)
        if cached is None:
            self._require(k, h)
            cached = self._image(k, h, i)
            self._images[key] = cached
        return cached

    def apply_bits(self, k: int, h: int, bits: int) -> int:
        if k == h:
            return bits
        out = 0
        for i in iter_bits(bits):
            out |= self.image(k, h, i)
        return out

    def apply(self, s: CharSet, h: int) -> CharSet:
        return CharSet(h, self.apply_bits(s.subgroup_id, h, s.bits))

    def describe(self) -> Dict:
        return {"kind": self.kind, "primes": list(self.primes)}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(primes={list(self.primes)})"


class StandardInductor(SubInductor):
    """I_K^H(chi): the whole fiber of chi."""

    kind = "standard"

    def _image(self, k: int, h: int, i: int) -> int:
        return self.table.fibers(k, h)[i]


class ComplementInductor(SubInductor):
    """J[D]_K^H(chi) = I_K^H(chi) minus the inductions of D(M) over M in (K, H].

    Raises:
        InductorError: If D is not conjugation-invariant or contains some 1_H
    """

    kind = "complement"

    def __init__(self, table: CharacterTable, diagram: Diagram, primes: Optional[Iterable[int]] = None):
        super().__init__(table, primes)
        bad = diagram.gal_violation()
        if bad is not None:
            raise InductorError(f"diagram value at subgroup {bad} is not conjugation-invariant", "diagram")
        for h in self.support():
            if diagram.values[h] & 1:
                raise InductorError(f"diagram value at subgroup {h} contains the trivial character", "diagram")
        self.diagram = diagram
        self._shadow: Dict[Tuple[int, int], int] = {}

    def shadow(self, k: int, h: int) -> int:
        """Union of the inductions to H of D(M) for M in (K, H]."""
        key = (k, h)
        if key not in self._shadow:
            out = 0
            for m in self.lattice.open_interval(k, h):
                out |= self.table.induce_bits(self.diagram.values[int(m)], int(m), h)
            self._shadow[key] = out
        return self._shadow[key]

    def _image(self, k: int, h: int, i: int) -> int:
        return self.table.fibers(k, h)[i] & ~self.shadow(k, h)

    def describe(self) -> Dict:
        return {**super().describe(), "diagram": list(self.diagram.values)}


class SectionInductor(SubInductor):
    """Section-based sub-inductor on a chain of subgroups.

    On each cover H_{i-1} < H_i a character chi goes to s(chi), the character of
    H_i with the same canonical representative, together with conj(s(conj chi)).
    Longer pairs compose along the chain. With ``conjugate_pair=False`` only
    s(chi) is kept, which in general breaks equivariance.

    Raises:
        InductorError: If the support is not a chain
    """

    kind = "section"

    def __init__(self, table: CharacterTable, primes: Optional[Iterable[int]] = None,
                 conjugate_pair: bool = True):
        super().__init__(table, primes)
        self.conjugate_pair = conjugate_pair
        chain = sorted(self.support(), key=lambda h: self.lattice[h].order)
        for a, b in zip(chain, chain[1:]):
            if not self.lattice.is_leq(a, b):
                raise InductorError("section sub-inductors need a cyclic support (a chain of subgroups)", "primes")
        self.chain = chain
        self._position = {h: i for i, h in enumerate(chain)}

    def section(self, lower: int, upper: int, i: int) -> int:
        """Index at ``upper`` of the character sharing the canonical rep of chi_i at ``lower``."""
        code = int(self.table.reps(lower)[i])
        return int(self.table.index_of(upper)[code])

    def _cover_image(self, lower: int, upper: int, i: int) -> int:
        s = self.section(lower, upper, i)
        out = 1 << s
        if self.conjugate_pair:
            conj_low = self.table.conjugation_map(lower)
            conj_up = self.table.conjugation_map(upper)
            out |= 1 << int(conj_up[self.section(lower, upper, int(conj_low[i]))])
        return out

    def _image(self, k: int, h: int, i: int) -> int:
        start, stop = self._position[k], self._position[h]
        bits = 1 << i
        for pos in range(start, stop):
            lower, upper = self.chain[pos], self.chain[pos + 1]
            nxt = 0
            for j in iter_bits(bits):
                nxt |= self._cover_image(lower, upper, j)
            bits = nxt
        return bits

    def section_table(self) -> List[Dict]:
        """For each cover of the chain, the pairs (rep of chi, rep of s(chi))."""
        out = []
        group = self.table.group
        for lower, upper in zip(self.chain, self.chain[1:]):
            reps_low = self.table.reps(lower)
            reps_up = self.table.reps(upper)
            out.append({
                "lower": lower,
                "upper": upper,
                "pairs": [
                    [list(group.decode(int(reps_low[i]))), list(group.decode(int(reps_up[self.section(lower, upper, i)])))]
                    for i in range(self.table.size(lower))
                ],
            })
        return out

    def describe(self) -> Dict:
        return {**super().describe(), "conjugate_pair": self.conjugate_pair}


class TensorInductor(SubInductor):
    """J tensor J' for sub-inductors supported on coprime parts P and P'.

    tau in (J tensor J')_K^H(chi) iff tau restricted to H_P lies in J_{K_P}^{H_P}(chi|K_P)
    and likewise for P'. Here H_P is the meet of H with G_P.

    Raises:
        InductorError: If the parts share a prime or the tables differ
    """

    kind = "tensor"

    def __init__(self, left: SubInductor, right: SubInductor):
        if left.table is not right.table:
            raise InductorError("tensor factors must share one character table", "inductor")
        common = set(left.primes) & set(right.primes)
        if common:
            raise InductorError(f"tensor factors are not coprime (shared primes {sorted(common)})", "primes")
        super().__init__(left.table, set(left.primes) | set(right.primes))
        self.left = left
        self.right = right

    def _factor(self, factor: SubInductor, k: int, h: int, i: int) -> int:
        lattice = self.lattice
        part = factor.support_top
        k1 = int(lattice.meet[k, part])
        h1 = int(lattice.meet[h, part])
        chi1 = int(self.table.restriction_map(k, k1)[i]) if k1 != k else i
        return self.table.induce_bits(factor.image(k1, h1, chi1), h1, h)

    def _image(self, k: int, h: int, i: int) -> int:
        return self._factor(self.left, k, h, i) & self._factor(self.right, k, h, i)

    def describe(self) -> Dict:
        return {"kind": self.kind, "primes": list(self.primes),
                "left": self.left.describe(), "right": self.right.describe()}


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    checked: int
    witness: Tuple[int, ...] = ()
    message: str = ""


@dataclass(frozen=True)
class AxiomReport:
    """Sub-inductor axiom results, one entry per axiom, in checking order."""

    mode: str
    checks: Tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def get(self, name: str) -> AxiomCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def failed(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]


AXIOMS = ("equivariance", "transitivity", "cover", "restriction", "unit")


def _sample(items: List, limit: int, rng: np.random.Generator) -> List:
    if len(items) <= limit:
        return items
    chosen = rng.choice(len(items), size=limit, replace=False)
    return [items[int(i)] for i in sorted(chosen)]


def check_subinductor_axioms(inductor: SubInductor, mode: str = "exhaustive",
                             rng: Optional[np.random.Generator] = None,
                             random_sets: int = 8, sample_triples: int = 2000) -> AxiomReport:
    """Check the sub-inductor axioms on singletons and on random character sets.

    ``mode`` is "exhaustive" (every pair and triple) or "sampled" (at most
    ``sample_triples`` of each). Each failing axiom carries its first witness.
    """
    if mode not in ("exhaustive", "sampled"):
        raise InductorError(f"unknown checking mode '{mode}'", "mode")
    rng = rng if rng is not None else np.random.default_rng(0)
    table = inductor.table
    lattice = inductor.lattice
    leq = lattice.leq
    meet = lattice.meet
    support = inductor.support()
    pairs = inductor.pairs()
    triples = [(k, l, h) for k, h in pairs for l in support
               if l != k and l != h and leq[k, l] and leq[l, h]]
    restriction_cases = [(k, l, h) for h in support for k in support if leq[k, h]
                         for l in support if leq[l, h] and l != h]
    if mode == "sampled":
        pairs = _sample(pairs, sample_triples, rng)
        triples = _sample(triples, sample_triples, rng)
        restriction_cases = _sample(restriction_cases, sample_triples, rng)

    checks = []

    # equivariance and union-preservation
    witness, message, count = (), "", 0
    for k, h in pairs:
        conj_k = table.conjugation_map(k)
        for i in range(table.size(k)):
            count += 1
            lhs = table.conj_bits(inductor.image(k, h, i), h)
            if lhs != inductor.image(k, h, int(conj_k[i])):
                witness, message = (k, h, i), "J(conj chi) != conj J(chi)"
                break
        if witness:
            break
        for _ in range(random_sets):
            bits = bits_from_indices(np.flatnonzero(rng.random(table.size(k)) < 0.5).tolist())
            count += 1
            union = 0
            for i in iter_bits(bits):
                union |= inductor.image(k, h, i)
            if inductor.apply_bits(k, h, bits) != union:
                witness, message = (k, h, bits), "J does not preserve unions"
                break
        if witness:
            break
    checks.append(AxiomCheck("equivariance", not witness, count, witness, message))

    witness, message, count = (), "", 0
    for k, l, h in triples:
        for i in range(table.size(k)):
            count += 1
            composite = inductor.apply_bits(l, h, inductor.image(k, l, i))
            if composite != inductor.image(k, h, i):
                witness, message = (k, l, h, i), "J_L^H J_K^L != J_K^H"
                break
        if witness:
            break
    checks.append(AxiomCheck("transitivity", not witness, count, witness, message))

    witness, message, count = (), "", 0
    for k, h in pairs:
        fib = table.fibers(k, h)
        for i in range(table.size(k)):
            count += 1
            img = inductor.image(k, h, i)
            if img == 0 or img & ~fib[i]:
                witness, message = (k, h, i), "J(chi) is empty or leaves the fiber of chi"
                break
        if witness:
            break
    checks.append(AxiomCheck("cover", not witness, count, witness, message))

    witness, message, count = (), "", 0
    for k, l, h in restriction_cases:
        m = int(meet[k, l])
        res_lm = table.restriction_map(l, m) if m != l else None
        for i in range(table.size(l)):
            count += 1
            lhs = table.restrict_bits(inductor.image(l, h, i), h, k)
            j = int(res_lm[i]) if res_lm is not None else i
            rhs = inductor.image(m, k, j)
            if lhs & ~rhs:
                witness, message = (k, l, h, i), "restriction of J_L^H(chi) to K exceeds J_{K^L}^K(chi|K^L)"
                break
        if witness:
            break
    checks.append(AxiomCheck("restriction", not witness, count, witness, message))

    witness, message, count = (), "", 0
    for k, h in pairs:
        count += 1
        if inductor.image(k, h, 0) & 1 == 0:
            witness, message = (k, h), "1_H is missing from J_K^H(1_K)"
            break
    checks.append(AxiomCheck("unit", not witness, count, witness, message))

    report = AxiomReport(mode, tuple(checks))
    if not report.passed:
        logger.debug(f"Sub-inductor {inductor!r} fails {report.failed()}")
    return report


def residue(inductor: SubInductor, h: int) -> CharSet:
    """Res_J(H): union of J_K^H(K-hat) over K < H in the support (empty at the trivial subgroup)."""
    table = inductor.table
    out = 0
    for k in inductor.lattice.below(h):
        k = int(k)
        if k != h:
            out |= inductor.apply_bits(k, h, table.full_bits(k))
    return CharSet(h, out)


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    checked: int
    witness: Tuple[int, ...] = ()


def cover_nonempty(inductor: SubInductor) -> CoverReport:
    """Check that every J_K^H(chi) is non-empty; the witness is (K, H, chi index)."""
    count = 0
    for k, h in inductor.pairs():
        for i in range(inductor.table.size(k)):
            count += 1
            if inductor.image(k, h, i) == 0:
                return CoverReport(False, count, (k, h, i))
    return CoverReport(True, count)
