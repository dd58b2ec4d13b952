"""Tests for the cyclic construction and the realization loop."""

import numpy as np
import pytest

from satlab.constructors.cyclic import cyclic_tight_pair, cyclic_tight_pair_on
from satlab.engine.diagrams import Diagram, tr_of_universe
from satlab.engine.inductors import StandardInductor
from satlab.engine.realize import realize, realize_diagram
from satlab.engine.tight import TightPair, localize_tight_pairs, verify_tight_pair
from satlab.oracle.brute_force import TrEvaluator, Witness, brute_force_realizable
from satlab.transfer.interior import enumerate_saturated
from satlab.transfer.systems import TransferSystem, generate_transfer_system
from satlab.utils.validators import ConstructionError, InductorError, RealizationError, TransferSystemError


# ---------------------------------------------------------------------------
# Cyclic tight pairs
# ---------------------------------------------------------------------------

class TestCyclicTightPair:

    def test_prime_order(self):
        pair = cyclic_tight_pair(5, 1)
        assert pair.diagram.values == (1, 0b10011)
        assert pair.inductor.kind == "section"

    def test_seven(self):
        assert cyclic_tight_pair(7, 1).diagram[1].indices() == [0, 1, 6]

    def test_prime_square(self):
        pair = cyclic_tight_pair(5, 2)
        assert pair.diagram[1].indices() == [0, 1, 4]
        assert pair.diagram[2].indices() == [0, 5, 20]
        assert pair.certificate.passed

    @pytest.mark.parametrize("p,n", [(3, 1), (2, 2), (4, 1), (5, 0), (9, 1)])
    def test_rejects_bad_parameters(self, p, n):
        with pytest.raises(ConstructionError):
            cyclic_tight_pair(p, n)

    def test_prime_must_divide(self, c25):
        with pytest.raises(ConstructionError):
            cyclic_tight_pair_on(c25, 7)

    def test_part_must_be_cyclic(self, table_of):
        with pytest.raises(ConstructionError):
            cyclic_tight_pair_on(table_of("C5xC5"), 5)


# ---------------------------------------------------------------------------
# Realization
# ---------------------------------------------------------------------------

class TestRealize:

    def test_identity_and_maximal_on_c5(self, c5):
        pair = cyclic_tight_pair_on(c5, 5)
        assert realize(TransferSystem.identity(c5.lattice), pair).indices() == [0, 1, 4]
        assert realize(TransferSystem.maximal(c5.lattice), pair) == c5.full(c5.lattice.top)

    def test_realize_diagram(self, c5):
        pair = cyclic_tight_pair_on(c5, 5)
        diagram = realize_diagram(TransferSystem.identity(c5.lattice), pair)
        assert diagram.values == (1, 0b10011)

    @pytest.mark.parametrize("p,n,count", [(5, 1, 2), (7, 1, 2), (5, 2, 4), (7, 2, 4)])
    def test_every_saturated_system_on_cyclic_groups(self, p, n, count):
        pair = cyclic_tight_pair(p, n)
        systems = list(enumerate_saturated(pair.table.lattice))
        assert len(systems) == count
        for system in systems:
            universe = realize(system, pair)
            assert pair.table.is_universe(universe)
            assert tr_of_universe(pair.table, universe) == system

    def test_every_saturated_system_on_c35(self, table_of):
        table = table_of("C35")
        pair = localize_tight_pairs([cyclic_tight_pair_on(table, 5), cyclic_tight_pair_on(table, 7)])
        systems = list(enumerate_saturated(table.lattice))
        assert len(systems) == 7
        for system in systems:
            assert tr_of_universe(table, realize(system, pair)) == system

    def test_rejects_non_saturated_system(self, c25):
        system = generate_transfer_system(c25.lattice, [(0, 2)])
        with pytest.raises(TransferSystemError):
            realize(system, cyclic_tight_pair_on(c25, 5))

    def test_rejects_partial_inductor(self, table_of):
        table = table_of("C35")
        with pytest.raises(InductorError):
            realize(TransferSystem.maximal(table.lattice), cyclic_tight_pair_on(table, 5))

    def test_round_limit(self, c5):
        with pytest.raises(RealizationError):
            realize(TransferSystem.maximal(c5.lattice), cyclic_tight_pair_on(c5, 5), max_rounds=1)

    def test_failed_certificate_falls_back_to_hypothesis(self, c5):
        diagram = Diagram.trivial(c5)
        standard = StandardInductor(c5)
        pair = TightPair(diagram, standard, verify_tight_pair(diagram, standard))
        assert not pair.certificate.passed
        with pytest.raises(RealizationError):
            realize(TransferSystem.identity(c5.lattice), pair)


# ---------------------------------------------------------------------------
# Cross-checks against the universe search
# ---------------------------------------------------------------------------

class TestAgainstBruteForce:

    @pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (5, 2), (7, 2)])
    def test_realized_universes_on_cyclic_groups(self, p, n):
        pair = cyclic_tight_pair(p, n)
        table = pair.table
        evaluator = TrEvaluator(table)
        for system in enumerate_saturated(table.lattice):
            universe = realize(system, pair)
            assert evaluator.edges(evaluator.orbits.mask_of_universe(universe)) == system.edges
            if len(evaluator.orbits) <= 12:
                found = brute_force_realizable(system, table)
                assert isinstance(found, Witness)
                assert tr_of_universe(table, found.universe) == system

    @pytest.mark.slow
    def test_product_of_primes(self, table_of):
        table = table_of("C35")
        pair = localize_tight_pairs([cyclic_tight_pair_on(table, 5), cyclic_tight_pair_on(table, 7)])
        evaluator = TrEvaluator(table)
        for system in enumerate_saturated(table.lattice):
            universe = realize(system, pair)
            assert evaluator.edges(evaluator.orbits.mask_of_universe(universe)) == system.edges
            assert isinstance(brute_force_realizable(system, table), Witness)

    def test_sampled_universes_on_product(self, table_of):
        table = table_of("C35")
        evaluator = TrEvaluator(table)
        rng = np.random.default_rng(35)
        for mask in rng.integers(0, evaluator.orbits.universe_count, size=50):
            universe = evaluator.orbits.universe_from_mask(int(mask))
            assert evaluator.edges(int(mask)) == tr_of_universe(table, universe).edges
