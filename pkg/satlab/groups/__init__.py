"""Finite Abelian groups and their subgroup lattices."""

from .abelian import GroupSpec, PrimaryPart, parse_group, abelian_groups_of_order
from .lattice import Subgroup, SubgroupLattice, enumerate_subgroups, rank_of_pair

__all__ = [
    "GroupSpec",
    "PrimaryPart",
    "parse_group",
    "abelian_groups_of_order",
    "Subgroup",
    "SubgroupLattice",
    "enumerate_subgroups",
    "rank_of_pair",
]
