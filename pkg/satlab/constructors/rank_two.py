"""Randomized tight pairs for rank-two p-groups through clustered diagrams.

Stage i samples D_{i+1} = D_i^{T_{i+1}} until the clusteredness threshold is
met, with T_i the subgroups of order p^i and T_{n+1} every nontrivial
subgroup. The last two diagrams give a weak generating scheme
(A, T) = (D_{n+1} minus D_n, D_n), and from it the candidate pair
(<A u T>_R minus T, J[A u T]). Whatever is returned has been verified.
"""

import math
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .bounds import BoundsReport, rank_two_bounds
from .clustering import check_inductive_props, clusteredness, divisor_sum, sample_dt
from .cyclic import cyclic_tight_pair_on
from ..characters.dual import CharacterTable
from ..engine.diagrams import Diagram, r_stabilize
from ..engine.inductors import ComplementInductor, CoverReport, cover_nonempty
from ..engine.tight import TightPair, TightPairCertificate, verify_tight_pair
from ..groups.abelian import prime_power_exponent
from ..utils.logger import get_logger, log_performance
from ..utils.validators import ConstructionError, validate_seed

logger = get_logger(__name__)

DEFAULT_STAGE_RETRIES = 50


@dataclass(frozen=True)
class StageConstants:
    """Reference constants of one stage of the existence proof (reporting only)."""

    alpha: float
    beta: float
    gamma: float
    rho: float
    next_c: float
    failure_bound: float
    large_c: bool
    large_p: bool


def stage_constants(p: int, n: int, c: float, alpha: float) -> StageConstants:
    """beta = p/C, gamma = (beta^-n - 1/p)^-1, rho = exp(-15 (alpha + 1) beta gamma), C' = rho C / 2."""
    beta = p / c if c > 0 else math.inf
    denominator = beta ** (-n) - 1 / p if beta > 0 else -1.0
    gamma = 1 / denominator if denominator > 0 else math.inf
    rho = math.exp(-15 * (alpha + 1) * beta * gamma) if math.isfinite(gamma) else 0.0
    quarter = c ** 0.25 if c > 0 else 0.0
    failure = 2 * p ** (3 * n + 0.75) * math.exp(-(rho / 5) * quarter)
    large_c = c > max(p ** (1 - 1 / n), 1e4)
    prime_floor = (rho * quarter / (5 * (3 * math.log(2) - 2) * (alpha + 1) * gamma)) if math.isfinite(gamma) else 0.0
    return StageConstants(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        rho=rho,
        next_c=rho / 2 * c,
        failure_bound=failure,
        large_c=large_c,
        large_p=p > prime_floor,
    )


@dataclass(frozen=True)
class WeakGeneratingSchemeReport:
    passed: bool
    witness: Tuple[int, ...] = ()
    message: str = ""


def check_weak_generating_scheme(a: Diagram, t: Diagram) -> WeakGeneratingSchemeReport:
    """A(H), T(H) nonempty, conjugation-invariant and disjoint for H != 1, and
    T(K) disjoint from the restriction of A(H) u T(H) for 1 != K < H.
    """
    table = a.table
    lattice = table.lattice
    bottom = lattice.bottom
    for h in range(len(lattice)):
        if h == bottom:
            continue
        av, tv = a.values[h], t.values[h]
        if not av or not tv:
            return WeakGeneratingSchemeReport(False, (h,), f"empty value at subgroup {h}")
        if table.conj_bits(av, h) != av or table.conj_bits(tv, h) != tv:
            return WeakGeneratingSchemeReport(False, (h,), f"value at subgroup {h} is not conjugation-invariant")
        if av & tv:
            return WeakGeneratingSchemeReport(False, (h,), f"A and T overlap at subgroup {h}")
    for k, h in lattice.strict_pairs():
        if k == bottom:
            continue
        if t.values[k] & table.restrict_bits(a.values[h] | t.values[h], h, k):
            return WeakGeneratingSchemeReport(False, (k, h), f"T({k}) meets the restriction from {h}")
    return WeakGeneratingSchemeReport(True)


@dataclass(frozen=True)
class SchemeOutcome:
    """Result of turning a weak generating scheme into a tight pair."""

    pair: Optional[TightPair]
    cover: CoverReport
    certificate: Optional[TightPairCertificate] = None

    @property
    def ok(self) -> bool:
        return self.pair is not None


def tight_pair_from_scheme(a: Diagram, t: Diagram, mode: str = "exhaustive") -> SchemeOutcome:
    """D = <A u T>_R minus T and J = J[A u T]; a pair is returned only when J covers and the pair verifies."""
    union = a | t
    inductor = ComplementInductor(a.table, union)
    cover = cover_nonempty(inductor)
    if not cover.ok:
        return SchemeOutcome(None, cover)
    diagram = r_stabilize(union) - t
    certificate = verify_tight_pair(diagram, inductor, mode=mode)
    pair = TightPair(diagram, inductor, certificate) if certificate.passed else None
    return SchemeOutcome(pair, cover, certificate)


@dataclass
class RankTwoRun:
    """Record of one seeded run: per-stage thresholds, clusteredness and retries."""

    group: str
    seed: int
    theta: float
    stage_retries: int
    layers: List[List[int]] = field(default_factory=list)
    thresholds: List[int] = field(default_factory=list)
    clusteredness: List[int] = field(default_factory=list)
    retries: List[int] = field(default_factory=list)
    constants: List[StageConstants] = field(default_factory=list)
    bounds: Optional[BoundsReport] = None
    success: bool = False
    failed_stage: Optional[int] = None
    best: Optional[int] = None
    failure: Optional[str] = None
    delegated: bool = False
    pair: Optional[TightPair] = None

    def summary(self) -> Dict:
        return {
            "group": self.group,
            "seed": self.seed,
            "theta": self.theta,
            "success": self.success,
            "delegated": self.delegated,
            "failed_stage": self.failed_stage,
            "best": self.best,
            "failure": self.failure,
            "thresholds": list(self.thresholds),
            "clusteredness": list(self.clusteredness),
            "retries": list(self.retries),
        }


def _layers(table: CharacterTable, p: int, n: int) -> List[List[int]]:
    lattice = table.lattice
    layers = [lattice.layer(p ** i) for i in range(1, n + 1)]
    layers.append([h for h in range(len(lattice)) if h != lattice.bottom])
    return layers


def rank_two_tight_pair(table: CharacterTable, seed: int = 0, theta: float = 0.0,
                        stage_retries: int = DEFAULT_STAGE_RETRIES, mode: str = "exhaustive",
                        with_bounds: bool = True) -> RankTwoRun:
    """Run the staged sampling pipeline on a p-group of rank at most two.

    Cyclic groups are handed to the cyclic construction. A run that cannot meet
    a threshold within ``stage_retries`` samples stops and records the stage and
    the best clusteredness seen.

    Raises:
        ConstructionError: If the group is not an odd p-group of rank <= 2
    """
    start = time.time()
    seed = validate_seed(seed)
    group = table.group
    if not group.is_p_group:
        raise ConstructionError(f"{group.label} is not a p-group", "group")
    p = group.primes[0]
    if p == 2:
        raise ConstructionError("the rank-two construction needs an odd prime", "group")
    rank = table.lattice.p_rank(p)
    if rank > 2:
        raise ConstructionError(f"{group.label} has rank {rank} > 2", "group")
    if not 0.0 <= theta <= 1.0:
        raise ConstructionError(f"theta must lie in [0, 1], got {theta}", "theta")

    run = RankTwoRun(group=group.label, seed=seed, theta=theta, stage_retries=stage_retries)
    n = prime_power_exponent(group.order, p)
    if rank == 1:
        run.pair = cyclic_tight_pair_on(table, p, mode=mode)
        run.success = True
        run.delegated = True
        return run

    rng = np.random.default_rng(seed)
    run.layers = _layers(table, p, n)
    if with_bounds:
        run.bounds = rank_two_bounds(n)
    diagram = Diagram.empty(table)
    current = clusteredness(diagram)
    run.clusteredness.append(current)
    history = [diagram]

    for stage, layer in enumerate(run.layers):
        alpha = float(divisor_sum(table.lattice, layer))
        run.constants.append(stage_constants(p, n, current, alpha))
        floor = 1 if stage == n else 2
        threshold = max(floor, math.floor(theta * current))
        run.thresholds.append(threshold)
        best, accepted, attempts = None, None, 0
        while attempts < stage_retries:
            attempts += 1
            candidate = sample_dt(diagram, layer, rng)
            props = check_inductive_props(diagram, candidate, layer)
            if not props.passed:
                run.failure = f"sampled diagram lost its inductive properties at {props.witness}"
                break
            value = clusteredness(candidate)
            best = value if best is None else max(best, value)
            if value >= threshold:
                accepted = (candidate, value)
                break
        run.retries.append(attempts)
        if accepted is None:
            run.failed_stage = stage + 1
            run.best = best
            run.failure = run.failure or f"no sample reached clusteredness {threshold}"
            logger.info(f"Rank-two run on {group.label} (seed {seed}) stopped at stage {stage + 1}")
            return run
        diagram, current = accepted
        run.clusteredness.append(current)
        history.append(diagram)

    a, t = history[-1] - history[-2], history[-2]
    scheme = check_weak_generating_scheme(a, t)
    if not scheme.passed:
        run.failed_stage = n + 1
        run.failure = f"weak generating scheme: {scheme.message}"
        return run
    outcome = tight_pair_from_scheme(a, t, mode=mode)
    if not outcome.cover.ok:
        run.failed_stage = n + 1
        run.failure = f"cover axiom fails at {outcome.cover.witness}"
        return run
    if outcome.pair is None:
        run.failed_stage = n + 1
        run.failure = "verification: " + "; ".join(outcome.certificate.failures)
        return run
    run.pair = outcome.pair
    run.success = True
    log_performance(logger, "rank_two_tight_pair", (time.time() - start) * 1000,
                    group=group.label, seed=seed, stages=len(run.layers))
    return run


def seed_sweep(table: CharacterTable, seeds, **kwargs) -> List[RankTwoRun]:
    """One run per seed, in order."""
    return [rank_two_tight_pair(table, seed=s, **kwargs) for s in seeds]
