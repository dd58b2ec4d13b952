"""Packaging regression tests."""

from setuptools import find_packages


def test_console_script_target_is_packaged():
    packages = set(find_packages())

    assert "satlab.cli" in packages
    assert "satlab.cli.commands" in packages
    assert "satlab.config" in packages
    assert "satlab.visualization" in packages


def test_library_packages():
    packages = set(find_packages())

    for name in ("groups", "characters", "transfer", "engine", "constructors", "oracle", "serialization"):
        assert f"satlab.{name}" in packages
