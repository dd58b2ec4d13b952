"""End-to-end tests for the satlab command line."""

import json

import pytest
from typer.testing import CliRunner

from satlab import __version__
from satlab.cli.main import app
from satlab.serialization import (
    LatticeModel,
    NegativeModel,
    RealizationModel,
    SearchModel,
    TightPairModel,
    TransferSystemCatalogModel,
    load_model,
)

runner = CliRunner()


@pytest.fixture
def invoke(config_file):
    """Run the CLI with a config that keeps logs in the temp dir."""
    def run(*args):
        return runner.invoke(app, ["--config", str(config_file), *[str(a) for a in args]])
    return run


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert f"satlab {__version__}" in result.stdout


def test_bad_config(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(f"logging:\n  log_file: \"{tmp_path / 'x.log'}\"\nconstructors:\n  theta: 3\n", encoding="utf-8")
    result = runner.invoke(app, ["--config", str(path), "stats", "--group", "C4"])
    assert result.exit_code == 2


# ---------------------------------------------------------------------------
# Lattice commands
# ---------------------------------------------------------------------------

class TestLatticeCommands:

    def test_lattice(self, invoke, tmp_path):
        out = tmp_path / "lattice.json"
        result = invoke("lattice", "--group", "C4", "--out", out)
        assert result.exit_code == 0, result.output
        model = load_model(LatticeModel, out)
        assert model.group == "C4"
        assert len(model.subgroups) == 3

    def test_lattice_tree(self, invoke):
        assert invoke("lattice", "--group", "C2xC2", "--format", "tree").exit_code == 0

    def test_bad_group(self, invoke):
        assert invoke("lattice", "--group", "D8").exit_code == 2

    def test_bad_format(self, invoke):
        assert invoke("lattice", "--group", "C4", "--format", "xml").exit_code == 2

    def test_stats_json(self, invoke):
        result = invoke("stats", "--group", "C2xC2", "--format", "json")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["subgroups"] == 5
        assert data["subgroups_by_order"] == {"1": 1, "2": 3, "4": 1}
        assert data["universes"] == 8

    def test_stats_table(self, invoke):
        assert invoke("stats", "--group", "C12").exit_code == 0

    def test_export_dot(self, invoke, tmp_path):
        out = tmp_path / "c4.dot"
        result = invoke("export-dot", "--group", "C4", "--ts", "maximal", "--out", out)
        assert result.exit_code == 0, result.output
        text = out.read_text(encoding="utf-8")
        assert text.count("[label=") == 3
        assert text.count("color=red") == 3


# ---------------------------------------------------------------------------
# Transfer-system commands
# ---------------------------------------------------------------------------

class TestSystemCommands:

    def test_enumerate(self, invoke, tmp_path):
        out = tmp_path / "ts.json"
        assert invoke("enumerate-ts", "--group", "C4", "--out", out).exit_code == 0
        assert load_model(TransferSystemCatalogModel, out).count == 5

    def test_enumerate_saturated(self, invoke, tmp_path):
        out = tmp_path / "sat.json"
        assert invoke("enumerate-ts", "--group", "C2xC2", "--saturated", "--out", out).exit_code == 0
        catalog = load_model(TransferSystemCatalogModel, out)
        assert catalog.count == 12
        assert catalog.saturated_only

    def test_enumerate_over_budget(self, invoke):
        assert invoke("enumerate-ts", "--group", "C2xC2xC2").exit_code == 3

    def test_count_saturated(self, invoke):
        result = invoke("count-saturated", "--group", "C2xC2", "--format", "json")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert (data["interior_operators"], data["direct"]) == (12, 12)

    def test_count_saturated_skips_direct_over_budget(self, config_file):
        config_file.write_text(config_file.read_text(encoding="utf-8")
                               + "transfer:\n  max_enumeration_subgroups: 2\n", encoding="utf-8")
        result = runner.invoke(app, ["--config", str(config_file), "count-saturated", "--group", "C4",
                                     "--format", "json"])
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert (data["interior_operators"], data["direct"]) == (4, None)


# ---------------------------------------------------------------------------
# Realization and tight pairs
# ---------------------------------------------------------------------------

def _non_saturated(tmp_path, group):
    path = tmp_path / "ts.json"
    path.write_text(json.dumps({"group": group, "edges": [[0, 1], [0, 2]]}), encoding="utf-8")
    return path


class TestRealizeCommand:

    def test_auto_on_product(self, invoke, tmp_path):
        out = tmp_path / "real.json"
        result = invoke("realize", "--group", "C35", "--out", out)
        assert result.exit_code == 0, result.output
        model = load_model(RealizationModel, out)
        assert model.method == "auto[5:section,7:section]"
        assert len(model.universe.chars) == 35

    def test_identity_on_c5(self, invoke, tmp_path):
        out = tmp_path / "real.json"
        assert invoke("realize", "--group", "C5", "--ts", "identity", "--out", out).exit_code == 0
        assert load_model(RealizationModel, out).universe.chars == [[0], [1], [4]]

    def test_table_format(self, invoke):
        assert invoke("realize", "--group", "C5", "--format", "table").exit_code == 0

    def test_unsupported_group(self, invoke):
        assert invoke("realize", "--group", "C2xC2").exit_code == 2

    def test_non_saturated_system(self, invoke, tmp_path):
        result = invoke("realize", "--group", "C25", "--ts", _non_saturated(tmp_path, "C25"))
        assert result.exit_code == 2

    def test_tight_pair_file(self, invoke, tmp_path):
        pair = tmp_path / "pair.json"
        assert invoke("tight-pair", "cyclic", "--p", 5, "--n", 2, "--out", pair).exit_code == 0
        out = tmp_path / "real.json"
        result = invoke("realize", "--group", "C25", "--ts", "identity", "--tight-pair", pair, "--out", out)
        assert result.exit_code == 0, result.output
        model = load_model(RealizationModel, out)
        assert model.method == "file[section]"
        assert model.system.edges == []

    def test_missing_tight_pair_file(self, invoke, tmp_path):
        assert invoke("realize", "--group", "C5", "--tight-pair", tmp_path / "none.json").exit_code == 2


class TestTightPairCommands:

    def test_cyclic(self, invoke, tmp_path):
        out = tmp_path / "pair.json"
        assert invoke("tight-pair", "cyclic", "--p", 7, "--out", out).exit_code == 0
        model = load_model(TightPairModel, out)
        assert model.group == "C7"
        assert model.certificate.passed

    def test_cyclic_table(self, invoke):
        result = invoke("tight-pair", "cyclic", "--p", 5, "--format", "table")
        assert result.exit_code == 0, result.output
        assert "section[5]" in result.stdout

    def test_cyclic_small_prime(self, invoke):
        assert invoke("tight-pair", "cyclic", "--p", 3).exit_code == 2

    def test_bad_mode(self, invoke):
        assert invoke("tight-pair", "cyclic", "--p", 5, "--mode", "bogus").exit_code == 2

    def test_tensor(self, invoke, tmp_path):
        five, seven, out = tmp_path / "five.json", tmp_path / "seven.json", tmp_path / "product.json"
        assert invoke("tight-pair", "cyclic", "--p", 5, "--out", five).exit_code == 0
        assert invoke("tight-pair", "cyclic", "--p", 7, "--out", seven).exit_code == 0
        result = invoke("tight-pair", "tensor", "--inputs", five, seven, "--out", out)
        assert result.exit_code == 0, result.output
        model = load_model(TightPairModel, out)
        assert model.group == "C5xC7"
        assert model.inductor.kind == "tensor"
        assert model.certificate.passed

    def test_rank2_delegates_cyclic(self, invoke, tmp_path):
        out = tmp_path / "run.json"
        assert invoke("tight-pair", "rank2", "--group", "C25", "--out", out).exit_code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["success"] and data["delegated"]

    def test_tensor_table(self, invoke, tmp_path):
        five, seven = tmp_path / "five.json", tmp_path / "seven.json"
        assert invoke("tight-pair", "cyclic", "--p", 5, "--out", five).exit_code == 0
        assert invoke("tight-pair", "cyclic", "--p", 7, "--out", seven).exit_code == 0
        result = invoke("tight-pair", "tensor", "--inputs", five, seven, "--format", "table")
        assert result.exit_code == 0, result.output
        assert "tensor(section[5], section[7])" in result.stdout

    def test_rank2_table(self, invoke):
        result = invoke("tight-pair", "rank2", "--group", "C25", "--format", "table")
        assert result.exit_code == 0, result.output
        assert "section" in result.stdout

    def test_rank2_rejects_even_group(self, invoke):
        assert invoke("tight-pair", "rank2", "--group", "C2xC2").exit_code == 2


# ---------------------------------------------------------------------------
# Oracle commands
# ---------------------------------------------------------------------------

class TestOracleCommands:

    def test_brute_check_witness(self, invoke, tmp_path):
        out = tmp_path / "search.json"
        assert invoke("brute-check", "--group", "C5", "--ts", "maximal", "--out", out).exit_code == 0
        model = load_model(SearchModel, out)
        assert model.outcome == "witness"
        assert model.searched == 4

    def test_brute_check_unrealizable(self, invoke, tmp_path):
        out = tmp_path / "search.json"
        result = invoke("brute-check", "--group", "C4", "--ts", _non_saturated(tmp_path, "C4"), "--out", out)
        assert result.exit_code == 1
        assert load_model(SearchModel, out).outcome == "unrealizable"

    def test_brute_check_budget(self, invoke):
        assert invoke("brute-check", "--group", "C5", "--ts", "maximal", "--budget", 1).exit_code == 3

    def test_verify_negative(self, invoke, tmp_path):
        out = tmp_path / "negative.json"
        result = invoke("verify-negative", "--p", 2, "--out", out)
        assert result.exit_code == 0, result.output
        model = load_model(NegativeModel, out)
        assert model.unrealizable and model.explicit_form

    def test_verify_negative_bad_prime(self, invoke):
        assert invoke("verify-negative", "--p", 5).exit_code == 2

    def test_census_csv(self, invoke, tmp_path):
        out = tmp_path / "census.csv"
        assert invoke("census", "--group", "C4", "--out", out).exit_code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("group,")
        assert lines[1] == "C4,3,5,4,4,4,0,2,"

    def test_census_by_order(self, invoke):
        result = invoke("census", "--max-order", 3)
        assert result.exit_code == 0, result.output
        rows = result.stdout.strip().splitlines()
        assert [row.split(",")[0] for row in rows[1:]] == ["C2", "C3"]

    def test_census_table(self, invoke):
        assert invoke("census", "--group", "C5", "--group", "C7", "--format", "table").exit_code == 0

    def test_census_needs_groups(self, invoke):
        assert invoke("census").exit_code == 2
