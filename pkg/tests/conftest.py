"""Shared fixtures for satlab tests."""

from functools import lru_cache

import numpy as np
import pytest

from satlab.characters.dual import CharacterTable
from satlab.groups.abelian import parse_group
from satlab.groups.lattice import enumerate_subgroups


@lru_cache(maxsize=None)
def _table(spec: str) -> CharacterTable:
    return CharacterTable(enumerate_subgroups(parse_group(spec)))


@pytest.fixture
def table_of():
    """Character table for a group spec; tables are cached across tests."""
    return _table


@pytest.fixture
def c5():
    return _table("C5")


@pytest.fixture
def c25():
    return _table("C25")


@pytest.fixture
def klein():
    return _table("C2xC2")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def config_file(tmp_path):
    """A config.yaml that keeps logs inside the test's temp dir."""
    path = tmp_path / "config.yaml"
    path.write_text(
        "logging:\n"
        f"  log_file: \"{tmp_path / 'logs' / 'satlab.log'}\"\n"
        "  level: \"WARNING\"\n"
        "constructors:\n"
        "  seed: 0\n",
        encoding="utf-8",
    )
    return path
