"""Visualization of subgroup lattices and transfer systems."""

from .hasse import export_dot, show_lattice

__all__ = ["export_dot", "show_lattice"]
