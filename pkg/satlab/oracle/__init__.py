"""Brute-force realizability, the rank-3 negative result, counting and census."""

from .brute_force import BudgetExceeded, TrEvaluator, Unrealizable, Witness, brute_force_realizable
from .census import CENSUS_COLUMNS, Census, CensusRow, census_csv, realized_transfer_systems, write_census
from .counting import elementary_abelian_shape, p_binomial, saturated_lower_bound
from .negative import (
    CoveringStats,
    NegativeReport,
    canonical_plane,
    covering_stats,
    extend_negative_system,
    lines_off_plane,
    negative_system,
    random_covering_choices,
    verify_negative_rank3,
)
from .orbits import OrbitIndex, orbit_index

__all__ = [
    "BudgetExceeded",
    "CENSUS_COLUMNS",
    "Census",
    "CensusRow",
    "CoveringStats",
    "NegativeReport",
    "OrbitIndex",
    "TrEvaluator",
    "Unrealizable",
    "Witness",
    "brute_force_realizable",
    "canonical_plane",
    "census_csv",
    "covering_stats",
    "elementary_abelian_shape",
    "extend_negative_system",
    "lines_off_plane",
    "negative_system",
    "orbit_index",
    "p_binomial",
    "random_covering_choices",
    "realized_transfer_systems",
    "saturated_lower_bound",
    "verify_negative_rank3",
    "write_census",
]
