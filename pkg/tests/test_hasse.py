"""Tests for Hasse diagram export and the terminal lattice view."""

import re

from satlab.oracle.negative import canonical_plane, elementary_rank3, negative_system
from satlab.transfer.systems import TransferSystem
from satlab.visualization.hasse import export_dot, show_lattice

NODE = re.compile(r"^    H\d+ \[label=")


def _nodes(text):
    return [line for line in text.splitlines() if NODE.match(line)]


def _edges(text, color):
    return [line for line in text.splitlines() if f"[color={color}" in line]


class TestExportDot:

    def test_cyclic_chain(self, table_of):
        text = export_dot(table_of("C4").lattice)
        assert text.startswith("digraph Sub {")
        assert 'label="C4";' in text
        assert len(_nodes(text)) == 3
        assert _edges(text, "black") == ["    H0 -> H1 [color=black];", "    H1 -> H2 [color=black];"]
        assert _edges(text, "red") == []

    def test_klein_covers(self, klein):
        text = export_dot(klein.lattice)
        assert len(_nodes(text)) == 5
        assert len(_edges(text, "black")) == 6

    def test_transfer_edges_are_highlighted(self, table_of):
        lattice = table_of("C4").lattice
        text = export_dot(lattice, system=TransferSystem.maximal(lattice))
        red = _edges(text, "red")
        assert len(red) == 3
        assert all("constraint=false" in line for line in red)

    def test_universe_labels(self, c5):
        text = export_dot(c5.lattice, table=c5, universe=c5.full(c5.lattice.top))
        assert "|U|=1" in text
        assert "|U|=5" in text

    def test_universe_without_table(self, c5):
        text = export_dot(c5.lattice, universe=c5.charset(c5.lattice.top, [0, 1, 4]))
        assert "|U|=3" in text

    def test_output_is_stable(self, klein):
        system = TransferSystem.maximal(klein.lattice)
        assert export_dot(klein.lattice, system=system) == export_dot(klein.lattice, system=system)

    def test_negative_system(self):
        lattice = elementary_rank3(2).lattice
        text = export_dot(lattice, system=negative_system(lattice, canonical_plane(lattice)))
        assert len(_nodes(text)) == 16
        assert len(_edges(text, "red")) == 7


class TestShowLattice:

    def test_layers(self, klein):
        tree = show_lattice(klein.lattice, console_output=False)
        assert "5 subgroups" in str(tree.label)
        assert [str(layer.label) for layer in tree.children] == ["|H| = 1", "|H| = 2", "|H| = 4"]
        assert len(tree.children[1].children) == 3

    def test_transfers_are_listed(self, table_of):
        lattice = table_of("C4").lattice
        tree = show_lattice(lattice, TransferSystem.maximal(lattice), console_output=False)
        top = tree.children[-1].children[0]
        labels = [str(child.label) for child in top.children]
        assert "covers [1]" in labels
        assert "[red]transfers from [0, 1][/red]" in labels
