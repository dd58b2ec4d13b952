"""Tests for JSON artifacts: models, codecs and file round trips."""

import json

import pytest

from satlab.constructors.cyclic import cyclic_tight_pair
from satlab.constructors.rank_two import rank_two_tight_pair
from satlab.engine.diagrams import Diagram
from satlab.engine.inductors import ComplementInductor, SectionInductor, StandardInductor, TensorInductor
from satlab.oracle.brute_force import BudgetExceeded, Unrealizable, brute_force_realizable
from satlab.oracle.negative import verify_negative_rank3
from satlab.serialization import (
    InductorModel,
    RealizationModel,
    TightPairModel,
    TransferSystemModel,
    catalog_to_model,
    charset_from_model,
    charset_to_model,
    diagram_from_model,
    diagram_to_model,
    inductor_from_model,
    inductor_to_model,
    lattice_to_model,
    load_model,
    negative_to_model,
    realization_to_model,
    run_to_model,
    save_model,
    search_to_model,
    tight_pair_from_model,
    tight_pair_to_model,
    transfer_system_from_model,
    transfer_system_to_model,
)
from satlab.transfer.enumeration import enumerate_transfer_systems
from satlab.transfer.systems import TransferSystem
from satlab.utils.validators import TightPairError, TransferSystemError, ValidationError


class TestBasicModels:

    def test_lattice(self, table_of):
        model = lattice_to_model(table_of("C4").lattice)
        assert model.group == "C4"
        assert [s.order for s in model.subgroups] == [1, 2, 4]
        assert model.leq == [[0, 1], [0, 2], [1, 2]]

    def test_charset(self, c5):
        s = c5.charset(c5.lattice.top, [0, 1, 4])
        model = charset_to_model(c5, s)
        assert model.chars == [[0], [1], [4]]
        assert charset_from_model(c5, model) == s

    def test_charset_checks(self, c5, c25):
        model = charset_to_model(c5, c5.full(1))
        with pytest.raises(ValidationError):
            charset_from_model(c25, model)
        with pytest.raises(ValidationError):
            charset_from_model(c5, model.model_copy(update={"subgroup": 9}))

    def test_transfer_system(self, table_of):
        lattice = table_of("C4").lattice
        model = transfer_system_to_model(TransferSystem.maximal(lattice))
        assert model.edges == [[0, 1], [0, 2], [1, 2]]
        assert transfer_system_from_model(lattice, model) == TransferSystem.maximal(lattice)
        with pytest.raises(TransferSystemError):
            transfer_system_from_model(lattice, TransferSystemModel(group="C4", edges=[[0, 2]]))

    def test_catalog(self, table_of):
        lattice = table_of("C4").lattice
        model = catalog_to_model(lattice, enumerate_transfer_systems(lattice))
        assert model.count == 5
        assert model.systems[0].edges == []
        assert not model.saturated_only


class TestDiagramAndInductor:

    def test_diagram_round_trip(self):
        diagram = cyclic_tight_pair(5, 2).diagram
        model = diagram_to_model(diagram)
        assert model.values["2"] == [[0], [5], [20]]
        assert diagram_from_model(diagram.table, model) == diagram

    @pytest.mark.parametrize("key", ["x", "9", "-1"])
    def test_bad_diagram_keys(self, c5, key):
        model = diagram_to_model(Diagram.trivial(c5))
        model.values[key] = [[0]]
        with pytest.raises(ValidationError):
            diagram_from_model(c5, model)

    def test_inductor_round_trips(self, table_of):
        table = table_of("C35")
        inductors = [
            StandardInductor(table, [5]),
            SectionInductor(table, [7]),
            TensorInductor(SectionInductor(table, [5]), StandardInductor(table, [7])),
        ]
        for inductor in inductors:
            rebuilt = inductor_from_model(table, inductor_to_model(inductor))
            assert rebuilt.describe() == inductor.describe()

    def test_complement_round_trip(self, c25):
        diagram = Diagram.from_mapping(c25, {1: 0b10010})
        model = inductor_to_model(ComplementInductor(c25, diagram))
        assert model.diagram is not None
        assert inductor_from_model(c25, model).diagram == diagram

    def test_tampered_sections(self, c25):
        model = inductor_to_model(SectionInductor(c25))
        model.sections[1]["pairs"][1][1] = [2]
        with pytest.raises(ValidationError):
            inductor_from_model(c25, model)

    @pytest.mark.parametrize("model", [
        InductorModel(kind="complement", primes=[5]),
        InductorModel(kind="tensor", primes=[5]),
        InductorModel(kind="mystery", primes=[5]),
    ])
    def test_incomplete_inductor_models(self, c25, model):
        with pytest.raises(ValidationError):
            inductor_from_model(c25, model)


class TestTightPairArtifacts:

    def test_file_round_trip(self, tmp_path, c25):
        pair = cyclic_tight_pair(5, 2)
        path = save_model(tight_pair_to_model(pair), tmp_path / "pair.json")
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["certificate"]["passed"] is True
        assert data["inductor"]["kind"] == "section"
        loaded = tight_pair_from_model(c25, load_model(TightPairModel, path))
        assert loaded.certificate.passed
        assert loaded.diagram == pair.diagram

    def test_certificate_model(self):
        model = tight_pair_to_model(cyclic_tight_pair(5, 1))
        assert model.certificate.witnesses[0].char == [2]
        assert model.certificate.escapes[0].char == [1]
        assert set(model.certificate.axioms) == {"equivariance", "transitivity", "cover", "restriction", "unit"}

    def test_tampered_pair_fails_reverification(self, c5):
        model = tight_pair_to_model(cyclic_tight_pair(5, 1))
        model.diagram = diagram_to_model(Diagram.trivial(c5))
        with pytest.raises(TightPairError):
            tight_pair_from_model(c5, model)

    def test_wrong_group(self, c25):
        model = tight_pair_to_model(cyclic_tight_pair(5, 1))
        with pytest.raises(ValidationError):
            tight_pair_from_model(c25, model)

    def test_load_errors(self, tmp_path):
        with pytest.raises(ValidationError):
            load_model(TightPairModel, tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text('{"group": "C5"}', encoding="utf-8")
        with pytest.raises(ValidationError):
            load_model(TightPairModel, bad)


class TestOutcomeModels:

    def test_search_models(self, c5):
        witness = search_to_model(c5, brute_force_realizable(TransferSystem.maximal(c5.lattice), c5))
        assert witness.outcome == "witness"
        assert witness.searched == 4
        assert witness.universe.chars == [[0], [1], [2], [3], [4]]
        assert search_to_model(c5, Unrealizable(4)).outcome == "unrealizable"
        budget = search_to_model(c5, BudgetExceeded(30, 22))
        assert (budget.outcome, budget.orbits, budget.limit) == ("budget", 30, 22)

    def test_realization_model(self, tmp_path, c5):
        model = realization_to_model(c5, TransferSystem.identity(c5.lattice),
                                     c5.charset(c5.lattice.top, [0, 1, 4]), "file[section]")
        path = save_model(model, tmp_path / "real.json")
        loaded = load_model(RealizationModel, path)
        assert loaded.method == "file[section]"
        assert loaded.system.edges == []
        assert loaded.universe.chars == [[0], [1], [4]]

    def test_run_model(self, c25):
        model = run_to_model(rank_two_tight_pair(c25))
        assert model.success and model.delegated
        assert model.pair is not None
        assert model.pair.group == "C25"

    def test_negative_model(self):
        model = negative_to_model(verify_negative_rank3(2))
        assert model.unrealizable and model.explicit_form
        assert model.edges == 7
        assert model.search.outcome == "unrealizable"
        assert model.search.searched == 128
