"""Tight pairs (D, J): certificates, tensor products and transport between groups."""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .diagrams import Diagram
from .inductors import (
    AxiomReport,
    ComplementInductor,
    SectionInductor,
    StandardInductor,
    SubInductor,
    TensorInductor,
    check_subinductor_axioms,
    residue,
)
from ..characters.dual import CharacterTable
from ..transfer.systems import TransferSystem, cofibrant_subgroups
from ..utils.helpers import iter_bits
from ..utils.logger import get_logger, log_performance
from ..utils.validators import InductorError, TightPairError, ValidationError

logger = get_logger(__name__)


@dataclass(frozen=True)
class TightPairCertificate:
    """Outcome of checking a candidate tight pair.

    ``witnesses`` maps each pair (K, H) to a character index of H lying in the
    induction of D(K) but outside both D(H) and Res_J(H). ``escapes`` maps
    each nontrivial H to a character index of D(H) outside Res_J(H).
    """

    passed: bool
    r_stable: bool
    gal_invariant: bool
    axioms: AxiomReport
    witnesses: Dict[Tuple[int, int], int] = field(default_factory=dict)
    escapes: Dict[int, int] = field(default_factory=dict)
    failures: Tuple[str, ...] = ()


@dataclass(frozen=True)
class TightPair:
    diagram: Diagram
    inductor: SubInductor
    certificate: TightPairCertificate

    @property
    def table(self) -> CharacterTable:
        return self.diagram.table

    @property
    def primes(self) -> Tuple[int, ...]:
        return self.inductor.primes


def verify_tight_pair(diagram: Diagram, inductor: SubInductor, mode: str = "exhaustive",
                      rng: Optional[np.random.Generator] = None, random_sets: int = 8,
                      sample_triples: int = 2000) -> TightPairCertificate:
    """Check the four tight-pair conditions on the support of ``inductor``.

    (0) D is R-stable and conjugation-invariant, (1) J is a sub-inductor,
    (2) the induction of D(K) is never inside D(H) together with Res_J(H)
    for K < H, and (3) D(H) escapes Res_J(H) for every nontrivial H.
    """
    start = time.time()
    table = diagram.table
    lattice = table.lattice
    support = inductor.support()
    failures: List[str] = []

    r_stable = True
    for k, h in inductor.pairs():
        if table.restrict_bits(diagram.values[h], h, k) & ~diagram.values[k]:
            r_stable = False
            failures.append(f"D is not R-stable on ({k}, {h})")
            break
    gal_bad = next((h for h in support if table.conj_bits(diagram.values[h], h) != diagram.values[h]), None)
    gal_invariant = gal_bad is None
    if not gal_invariant:
        failures.append(f"D({gal_bad}) is not conjugation-invariant")

    axioms = check_subinductor_axioms(inductor, mode=mode, rng=rng,
                                      random_sets=random_sets, sample_triples=sample_triples)
    failures.extend(f"sub-inductor axiom '{name}' fails" for name in axioms.failed())

    residues = {h: residue(inductor, h).bits for h in support}
    witnesses: Dict[Tuple[int, int], int] = {}
    for k, h in inductor.pairs():
        outside = table.induce_bits(diagram.values[k], k, h) & ~(diagram.values[h] | residues[h])
        if outside:
            witnesses[(k, h)] = next(iter_bits(outside))
        else:
            failures.append(f"induction of D({k}) lies inside D({h}) and Res_J({h})")

    escapes: Dict[int, int] = {}
    for h in support:
        if h == lattice.bottom:
            continue
        free = diagram.values[h] & ~residues[h]
        if free:
            escapes[h] = next(iter_bits(free))
        else:
            failures.append(f"D({h}) lies inside Res_J({h})")

    certificate = TightPairCertificate(
        passed=not failures,
        r_stable=r_stable,
        gal_invariant=gal_invariant,
        axioms=axioms,
        witnesses=witnesses,
        escapes=escapes,
        failures=tuple(failures),
    )
    log_performance(logger, "verify_tight_pair", (time.time() - start) * 1000,
                    group=table.group.label, kind=inductor.kind, passed=certificate.passed)
    return certificate


def make_tight_pair(diagram: Diagram, inductor: SubInductor, mode: str = "exhaustive",
                    rng: Optional[np.random.Generator] = None) -> TightPair:
    """Verify and bundle; a failing certificate raises.

    Raises:
        TightPairError: If verification fails
    """
    certificate = verify_tight_pair(diagram, inductor, mode=mode, rng=rng)
    if not certificate.passed:
        raise TightPairError(f"tight pair verification failed: {'; '.join(certificate.failures)}")
    return TightPair(diagram, inductor, certificate)


def tensor_diagram(left: Diagram, right: Diagram, left_primes: Sequence[int],
                   right_primes: Sequence[int]) -> Diagram:
    """(D tensor D')(H): characters whose restrictions to H_P and H_P' lie in D and D'."""
    table = left.table
    lattice = table.lattice
    top_left = lattice.part_top(left_primes)
    top_right = lattice.part_top(right_primes)
    support_top = lattice.part_top(set(left_primes) | set(right_primes))
    values = []
    for h in range(len(lattice)):
        if not lattice.is_leq(h, support_top):
            values.append(0)
            continue
        h1 = int(lattice.meet[h, top_left])
        h2 = int(lattice.meet[h, top_right])
        values.append(table.induce_bits(left.values[h1], h1, h) & table.induce_bits(right.values[h2], h2, h))
    return Diagram(table, tuple(values))


def tensor_tight_pairs(first: TightPair, second: TightPair, mode: str = "exhaustive") -> TightPair:
    """Tensor of tight pairs on coprime parts, re-verified.

    Raises:
        InductorError: If the parts are not coprime
        TightPairError: If the product fails verification
    """
    inductor = TensorInductor(first.inductor, second.inductor)
    diagram = tensor_diagram(first.diagram, second.diagram, first.primes, second.primes)
    return make_tight_pair(diagram, inductor, mode=mode)


def localize_tight_pairs(pairs: Sequence[TightPair], mode: str = "exhaustive") -> TightPair:
    """Fold a family of tight pairs on pairwise coprime parts into one tensor product."""
    if not pairs:
        raise ValidationError("at least one tight pair is required", "pairs")
    result = pairs[0]
    for pair in pairs[1:]:
        result = tensor_tight_pairs(result, pair, mode=mode)
    return result


class _Embedding:
    """Coordinate embedding of a group into a product group, acting on subgroups and characters."""

    def __init__(self, source: CharacterTable, target: CharacterTable, positions: Sequence[int]):
        src_orders = source.group.orders
        tgt_orders = target.group.orders
        if len(positions) != len(src_orders) or any(
                not (0 <= p < len(tgt_orders)) or tgt_orders[p] != d for p, d in zip(positions, src_orders)):
            raise InductorError(f"cannot embed {source.group.label} into {target.group.label} at {list(positions)}",
                                "positions")
        self.source = source
        self.target = target
        self.positions = list(positions)
        self.subgroups = [target.lattice.find(self._point(e) for e in sub.elements) for sub in source.lattice]

    def _point(self, coords: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * len(self.target.group.orders)
        for p, c in zip(self.positions, coords):
            out[p] = int(c)
        return tuple(out)

    def char_bits(self, bits: int, h: int) -> int:
        """Carry a character bitset of H to the image subgroup, via representatives."""
        target_h = self.subgroups[h]
        index = self.target.index_of(target_h)
        reps = self.source.reps(h)
        out = 0
        for i in iter_bits(bits):
            rep = self.source.group.decode(int(reps[i]))
            out |= 1 << int(index[int(self.target.group.encode(self._point(rep)))])
        return out

    def diagram(self, diagram: Diagram) -> Diagram:
        values = {self.subgroups[h]: self.char_bits(bits, h) for h, bits in enumerate(diagram.values)}
        return Diagram.from_mapping(self.target, values)


def _transport_inductor(inductor: SubInductor, embedding: _Embedding) -> SubInductor:
    target = embedding.target
    primes = inductor.primes
    if isinstance(inductor, TensorInductor):
        return TensorInductor(_transport_inductor(inductor.left, embedding),
                              _transport_inductor(inductor.right, embedding))
    if isinstance(inductor, ComplementInductor):
        return ComplementInductor(target, embedding.diagram(inductor.diagram), primes)
    if isinstance(inductor, SectionInductor):
        return SectionInductor(target, primes, conjugate_pair=inductor.conjugate_pair)
    if isinstance(inductor, StandardInductor):
        return StandardInductor(target, primes)
    raise InductorError(f"cannot transport a '{inductor.kind}' sub-inductor", "inductor")


def transport_tight_pair(pair: TightPair, target: CharacterTable, positions: Sequence[int],
                         mode: str = "exhaustive") -> TightPair:
    """Carry a tight pair on G_1 to the P-part of G = G_1 x G_2.

    ``positions`` lists the coordinates of G that hold the factors of G_1. The
    image of G_1 must be exactly the part of G for the primes of G_1.

    Raises:
        InductorError: If the embedding is impossible or does not hit G_P
        TightPairError: If the transported pair fails verification
    """
    embedding = _Embedding(pair.table, target, positions)
    image_top = embedding.subgroups[pair.table.lattice.top]
    if pair.inductor.is_full and image_top != target.lattice.part_top(pair.table.group.primes):
        raise InductorError("embedded group is not a primary part of the target", "positions")
    inductor = _transport_inductor(pair.inductor, embedding)
    return make_tight_pair(embedding.diagram(pair.diagram), inductor, mode=mode)


@dataclass(frozen=True)
class HypothesisReport:
    passed: bool
    failures: Tuple[str, ...] = ()
    witnesses: Dict[Tuple[int, int], int] = field(default_factory=dict)


def check_realization_hypothesis(system: TransferSystem, diagram: Diagram, inductor: SubInductor,
                                 mode: str = "exhaustive") -> HypothesisReport:
    """Weaker hypothesis for realization, relative to one transfer system R.

    D must be R-stable and conjugation-invariant, J a sub-inductor, and for
    every R-cofibrant H and K < H the induction of D(K) must escape D(H) union Res_J(H).
    """
    table = diagram.table
    failures: List[str] = []
    violation = diagram.r_stability_violation()
    if violation is not None:
        failures.append(f"D is not R-stable on {violation}")
    gal_bad = diagram.gal_violation()
    if gal_bad is not None:
        failures.append(f"D({gal_bad}) is not conjugation-invariant")
    axioms = check_subinductor_axioms(inductor, mode=mode)
    failures.extend(f"sub-inductor axiom '{name}' fails" for name in axioms.failed())

    witnesses: Dict[Tuple[int, int], int] = {}
    for h in sorted(cofibrant_subgroups(system)):
        blocked = diagram.values[h] | residue(inductor, h).bits
        for k in table.lattice.below(h):
            k = int(k)
            if k == h:
                continue
            outside = table.induce_bits(diagram.values[k], k, h) & ~blocked
            if outside:
                witnesses[(k, h)] = next(iter_bits(outside))
            else:
                failures.append(f"induction of D({k}) lies inside D({h}) and Res_J({h})")
    return HypothesisReport(not failures, tuple(failures), witnesses)
