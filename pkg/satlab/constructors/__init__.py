"""Tight-pair constructors: cyclic chains, clustered diagrams and the rank-two pipeline."""

from .auto import AutoOutcome, auto_tight_pair
from .bounds import BoundsReport, Tower, rank_two_bounds
from .clustering import (
    BoundCheck,
    InductivePropsReport,
    check_inductive_props,
    cluster_profile,
    clusteredness,
    divisor_sum,
    divisor_sum_bounds,
    sample_dt,
)
from .cyclic import cyclic_tight_pair, cyclic_tight_pair_on
from .partitions import CLAIMS, PartitionStructure, partition_structure
from .rank_two import (
    RankTwoRun,
    SchemeOutcome,
    StageConstants,
    WeakGeneratingSchemeReport,
    check_weak_generating_scheme,
    rank_two_tight_pair,
    seed_sweep,
    stage_constants,
    tight_pair_from_scheme,
)

__all__ = [
    "AutoOutcome",
    "BoundCheck",
    "BoundsReport",
    "CLAIMS",
    "InductivePropsReport",
    "PartitionStructure",
    "RankTwoRun",
    "SchemeOutcome",
    "StageConstants",
    "Tower",
    "WeakGeneratingSchemeReport",
    "auto_tight_pair",
    "check_inductive_props",
    "check_weak_generating_scheme",
    "cluster_profile",
    "clusteredness",
    "cyclic_tight_pair",
    "cyclic_tight_pair_on",
    "divisor_sum",
    "divisor_sum_bounds",
    "partition_structure",
    "rank_two_bounds",
    "rank_two_tight_pair",
    "seed_sweep",
    "stage_constants",
    "tight_pair_from_scheme",
]
