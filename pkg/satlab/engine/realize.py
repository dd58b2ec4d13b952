"""Realizing a saturated transfer system as Tr(U) for a universe U."""

import time
from typing import Optional

from .diagrams import Diagram, jr_stabilize, tr_of_universe
from .inductors import StandardInductor
from .tight import TightPair, check_realization_hypothesis
from ..characters.dual import CharSet
from ..transfer.systems import TransferSystem, is_saturated
from ..utils.logger import get_logger, log_performance
from ..utils.validators import InductorError, RealizationError, TransferSystemError

logger = get_logger(__name__)


def realize(system: TransferSystem, pair: TightPair, max_rounds: Optional[int] = None) -> CharSet:
    """Produce a universe U with Tr(U) = R from a tight pair on the whole group.

    Starting from D with 1_H added everywhere, the (I, R)-stabilization and the
    (J, maximal)-stabilization alternate until neither changes the diagram.
    Every changing step must strictly grow it. U is the value at G.

    Raises:
        TransferSystemError: If R is not saturated
        InductorError: If J is not defined on the whole lattice
        RealizationError: If the loop fails or the result does not realize R
    """
    start = time.time()
    table = pair.table
    lattice = table.lattice
    if not is_saturated(system):
        raise TransferSystemError("only saturated transfer systems are realized", "system")
    if not pair.inductor.is_full:
        raise InductorError("realization needs a sub-inductor on the whole group", "inductor")
    if not pair.certificate.passed:
        report = check_realization_hypothesis(system, pair.diagram, pair.inductor)
        if not report.passed:
            raise RealizationError(f"tight pair does not satisfy the realization hypothesis: {report.failures[0]}")

    standard = StandardInductor(table)
    maximal = TransferSystem.maximal(lattice)
    total_bits = sum(table.size(h) for h in range(len(lattice)))
    limit = max_rounds if max_rounds is not None else 2 * total_bits + 2

    diagram = pair.diagram.with_trivial()
    unchanged = 0
    rounds = 0
    while unchanged < 2:
        if rounds >= limit:
            raise RealizationError(f"no fixed point after {rounds} stabilization steps")
        if rounds % 2 == 0:
            grown = jr_stabilize(diagram, standard, system)
        else:
            grown = jr_stabilize(diagram, pair.inductor, maximal)
        rounds += 1
        if grown == diagram:
            unchanged += 1
            continue
        if not diagram.issubset(grown):
            raise RealizationError("stabilization step shrank the diagram")
        unchanged = 0
        diagram = grown

    universe = diagram[lattice.top]
    if not table.is_universe(universe):
        raise RealizationError("fixed point at G is not a universe")
    realized = tr_of_universe(table, universe)
    if realized != system:
        edge = min(realized.edges ^ system.edges)
        raise RealizationError("Tr(U) differs from the requested transfer system", edge)

    log_performance(logger, "realize", (time.time() - start) * 1000,
                    group=table.group.label, rounds=rounds, universe=len(universe))
    return universe


def realize_diagram(system: TransferSystem, pair: TightPair) -> Diagram:
    """The universe from ``realize`` restricted to every subgroup."""
    return Diagram.from_universe(pair.table, realize(system, pair))
