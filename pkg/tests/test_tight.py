"""Tests for tight-pair verification, tensor products and transport."""

import pytest

from satlab.constructors.cyclic import cyclic_tight_pair, cyclic_tight_pair_on
from satlab.engine.diagrams import Diagram
from satlab.engine.inductors import SectionInductor, StandardInductor
from satlab.engine.tight import (
    check_realization_hypothesis,
    localize_tight_pairs,
    make_tight_pair,
    tensor_tight_pairs,
    transport_tight_pair,
    verify_tight_pair,
)
from satlab.transfer.systems import TransferSystem
from satlab.utils.validators import InductorError, TightPairError, ValidationError


class TestVerify:

    def test_certificate_of_cyclic_pair(self):
        pair = cyclic_tight_pair(5, 1)
        certificate = pair.certificate
        assert certificate.passed
        assert certificate.r_stable and certificate.gal_invariant
        assert certificate.axioms.passed
        assert certificate.witnesses == {(0, 1): 2}
        assert certificate.escapes == {1: 1}
        assert certificate.failures == ()

    def test_diagram_inside_residue_fails(self, c5):
        certificate = verify_tight_pair(Diagram.trivial(c5), SectionInductor(c5))
        assert not certificate.passed
        assert certificate.r_stable
        assert any("Res_J" in failure for failure in certificate.failures)
        with pytest.raises(TightPairError):
            make_tight_pair(Diagram.trivial(c5), SectionInductor(c5))

    def test_induction_inside_diagram_fails(self, c5):
        certificate = verify_tight_pair(Diagram.full(c5), SectionInductor(c5))
        assert not certificate.passed
        assert (0, 1) not in certificate.witnesses

    def test_induction_covered_by_residue_fails(self, table_of):
        # D(C3) misses only the trivial character, which the residue supplies
        c3 = table_of("C3")
        diagram = Diagram(c3, (1, 0b110))
        certificate = verify_tight_pair(diagram, SectionInductor(c3))
        assert certificate.r_stable and certificate.gal_invariant
        assert certificate.axioms.passed
        assert certificate.escapes == {1: 1}
        assert (0, 1) not in certificate.witnesses
        assert "induction of D(0) lies inside D(1) and Res_J(1)" in certificate.failures
        assert not certificate.passed
        with pytest.raises(TightPairError):
            make_tight_pair(diagram, SectionInductor(c3))

    def test_non_invariant_diagram_fails(self, c5):
        certificate = verify_tight_pair(Diagram(c5, (1, 0b00011)), SectionInductor(c5))
        assert not certificate.gal_invariant
        assert not certificate.passed


class TestRealizationHypothesis:

    def test_holds_for_cyclic_pair(self, c5):
        pair = cyclic_tight_pair_on(c5, 5)
        report = check_realization_hypothesis(TransferSystem.identity(c5.lattice), pair.diagram, pair.inductor)
        assert report.passed
        assert report.witnesses == {(0, 1): 2}

    def test_fails_when_residue_covers_everything(self, c5):
        report = check_realization_hypothesis(TransferSystem.identity(c5.lattice), Diagram.trivial(c5),
                                              StandardInductor(c5))
        assert not report.passed


class TestTensorAndTransport:

    def test_tensor_of_cyclic_parts(self, table_of):
        table = table_of("C35")
        five = cyclic_tight_pair_on(table, 5)
        seven = cyclic_tight_pair_on(table, 7)
        assert not five.inductor.is_full
        product = tensor_tight_pairs(five, seven)
        assert product.certificate.passed
        assert product.inductor.kind == "tensor"
        assert product.inductor.is_full
        assert product.primes == (5, 7)

    def test_localize(self, table_of):
        table = table_of("C35")
        pairs = [cyclic_tight_pair_on(table, 5), cyclic_tight_pair_on(table, 7)]
        assert localize_tight_pairs(pairs).inductor.is_full
        assert localize_tight_pairs(pairs[:1]) is pairs[0]
        with pytest.raises(ValidationError):
            localize_tight_pairs([])

    def test_tensor_needs_coprime_parts(self, table_of):
        pair = cyclic_tight_pair_on(table_of("C35"), 5)
        with pytest.raises(InductorError):
            tensor_tight_pairs(pair, pair)

    def test_transport_into_product(self, table_of):
        target = table_of("C5xC7")
        moved = transport_tight_pair(cyclic_tight_pair(5, 1), target, [0])
        assert moved.certificate.passed
        assert moved.inductor.kind == "section"
        part = target.lattice.part_top([5])
        assert moved.diagram[part].bits.bit_count() == 3
        other = transport_tight_pair(cyclic_tight_pair(7, 1), target, [1])
        assert localize_tight_pairs([moved, other]).inductor.is_full

    def test_transport_rejects_bad_position(self, table_of):
        with pytest.raises(InductorError):
            transport_tight_pair(cyclic_tight_pair(5, 1), table_of("C5xC7"), [1])
