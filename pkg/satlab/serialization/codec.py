"""Conversions between satlab objects and their JSON models."""

from pathlib import Path
from typing import Optional, Type, TypeVar, Union

import pydantic

from .models import (
    CertificateModel,
    CharSetModel,
    DiagramModel,
    EscapeModel,
    InductorModel,
    LatticeModel,
    NegativeModel,
    RankTwoRunModel,
    RealizationModel,
    SearchModel,
    SubgroupModel,
    TightPairModel,
    TransferSystemCatalogModel,
    TransferSystemModel,
    WitnessModel,
)
from ..characters.dual import CharacterTable, CharSet
from ..constructors.rank_two import RankTwoRun
from ..engine.diagrams import Diagram
from ..engine.inductors import (
    ComplementInductor,
    SectionInductor,
    StandardInductor,
    SubInductor,
    TensorInductor,
)
from ..engine.tight import TightPair, TightPairCertificate, verify_tight_pair
from ..groups.lattice import SubgroupLattice
from ..oracle.brute_force import BudgetExceeded, SearchOutcome, Unrealizable, Witness
from ..oracle.negative import NegativeReport, elementary_rank3
from ..transfer.systems import TransferSystem, transfer_system_from_edges
from ..utils.helpers import atomic_write_text
from ..utils.validators import TightPairError, ValidationError

M = TypeVar("M", bound=pydantic.BaseModel)


def _check_group(table_or_lattice, label: str) -> None:
    expected = table_or_lattice.group.label
    if label != expected:
        raise ValidationError(f"artifact is for {label}, expected {expected}", "group")


def lattice_to_model(lattice: SubgroupLattice) -> LatticeModel:
    return LatticeModel(
        group=lattice.group.label,
        subgroups=[SubgroupModel(id=s.id, order=s.order, elements=[list(e) for e in s.elements]) for s in lattice],
        leq=[[k, h] for k, h in lattice.strict_pairs()],
    )


def charset_to_model(table: CharacterTable, s: CharSet) -> CharSetModel:
    return CharSetModel(group=table.group.label, subgroup=s.subgroup_id, chars=[list(r) for r in table.reps_of(s)])


def charset_from_model(table: CharacterTable, model: CharSetModel) -> CharSet:
    _check_group(table, model.group)
    if model.subgroup >= len(table.lattice):
        raise ValidationError(f"unknown subgroup {model.subgroup}", "subgroup")
    return table.charset_from_reps(model.subgroup, model.chars)


def transfer_system_to_model(system: TransferSystem) -> TransferSystemModel:
    return TransferSystemModel(group=system.lattice.group.label, edges=[list(e) for e in system.sorted_edges()])


def transfer_system_from_model(lattice: SubgroupLattice, model: TransferSystemModel) -> TransferSystem:
    """Raises TransferSystemError if the edges do not form a transfer system."""
    _check_group(lattice, model.group)
    return transfer_system_from_edges(lattice, [tuple(e) for e in model.edges])


def diagram_to_model(diagram: Diagram) -> DiagramModel:
    table = diagram.table
    return DiagramModel(
        group=table.group.label,
        values={str(h): [list(r) for r in table.reps_of(CharSet(h, bits))]
                for h, bits in enumerate(diagram.values) if bits},
    )


def diagram_from_model(table: CharacterTable, model: DiagramModel) -> Diagram:
    _check_group(table, model.group)
    values = {}
    for key, reps in model.values.items():
        try:
            h = int(key)
        except ValueError as e:
            raise ValidationError(f"subgroup key {key!r} is not an integer", "values") from e
        if not 0 <= h < len(table.lattice):
            raise ValidationError(f"unknown subgroup {h}", "values")
        values[h] = table.charset_from_reps(h, reps).bits
    return Diagram.from_mapping(table, values)


def inductor_to_model(inductor: SubInductor) -> InductorModel:
    model = InductorModel(kind=inductor.kind, primes=list(inductor.primes))
    if isinstance(inductor, SectionInductor):
        model.conjugate_pair = inductor.conjugate_pair
        model.sections = inductor.section_table()
    elif isinstance(inductor, ComplementInductor):
        model.diagram = diagram_to_model(inductor.diagram)
    elif isinstance(inductor, TensorInductor):
        model.left = inductor_to_model(inductor.left)
        model.right = inductor_to_model(inductor.right)
    return model


def inductor_from_model(table: CharacterTable, model: InductorModel) -> SubInductor:
    """Rebuild a sub-inductor by kind; stored section data must match the canonical sections."""
    if model.kind == "standard":
        return StandardInductor(table, model.primes)
    if model.kind == "section":
        inductor = SectionInductor(table, model.primes, conjugate_pair=model.conjugate_pair is not False)
        if model.sections is not None and model.sections != inductor.section_table():
            raise ValidationError("stored section data differs from the canonical sections", "sections")
        return inductor
    if model.kind == "complement":
        if model.diagram is None:
            raise ValidationError("complement sub-inductor needs a diagram", "diagram")
        return ComplementInductor(table, diagram_from_model(table, model.diagram), model.primes)
    if model.kind == "tensor":
        if model.left is None or model.right is None:
            raise ValidationError("tensor sub-inductor needs both factors", "inductor")
        return TensorInductor(inductor_from_model(table, model.left), inductor_from_model(table, model.right))
    raise ValidationError(f"unknown sub-inductor kind '{model.kind}'", "kind")


def certificate_to_model(table: CharacterTable, certificate: TightPairCertificate) -> CertificateModel:
    group = table.group

    def rep(h: int, i: int):
        return list(group.decode(int(table.reps(h)[i])))

    return CertificateModel(
        passed=certificate.passed,
        r_stable=certificate.r_stable,
        gal_invariant=certificate.gal_invariant,
        axioms={c.name: c.passed for c in certificate.axioms.checks},
        witnesses=[WitnessModel(k=k, h=h, char=rep(h, i)) for (k, h), i in sorted(certificate.witnesses.items())],
        escapes=[EscapeModel(h=h, char=rep(h, i)) for h, i in sorted(certificate.escapes.items())],
        failures=list(certificate.failures),
    )


def tight_pair_to_model(pair: TightPair) -> TightPairModel:
    return TightPairModel(
        group=pair.table.group.label,
        diagram=diagram_to_model(pair.diagram),
        inductor=inductor_to_model(pair.inductor),
        certificate=certificate_to_model(pair.table, pair.certificate),
    )


def tight_pair_from_model(table: CharacterTable, model: TightPairModel) -> TightPair:
    """Rebuild and re-verify a tight pair.

    Raises:
        TightPairError: If the bundle claims to pass but re-verification fails
    """
    _check_group(table, model.group)
    diagram = diagram_from_model(table, model.diagram)
    inductor = inductor_from_model(table, model.inductor)
    certificate = verify_tight_pair(diagram, inductor)
    if model.certificate.passed and not certificate.passed:
        raise TightPairError(f"stored tight pair fails re-verification: {'; '.join(certificate.failures)}")
    return TightPair(diagram, inductor, certificate)


def search_to_model(table: CharacterTable, outcome: SearchOutcome) -> SearchModel:
    label = table.group.label
    if isinstance(outcome, Witness):
        return SearchModel(group=label, outcome="witness", searched=outcome.searched,
                           universe=charset_to_model(table, outcome.universe))
    if isinstance(outcome, Unrealizable):
        return SearchModel(group=label, outcome="unrealizable", searched=outcome.searched)
    if isinstance(outcome, BudgetExceeded):
        return SearchModel(group=label, outcome="budget", orbits=outcome.orbits, limit=outcome.limit)
    raise ValidationError(f"unknown search outcome {outcome!r}", "outcome")


def realization_to_model(table: CharacterTable, system: TransferSystem, universe: CharSet,
                         method: str) -> RealizationModel:
    return RealizationModel(group=table.group.label, system=transfer_system_to_model(system),
                            universe=charset_to_model(table, universe), method=method)


def run_to_model(run: RankTwoRun) -> RankTwoRunModel:
    model = RankTwoRunModel(**run.summary())
    if run.pair is not None:
        model.pair = tight_pair_to_model(run.pair)
    return model


def save_model(model: pydantic.BaseModel, path: Union[str, Path]) -> Path:
    return atomic_write_text(path, model.model_dump_json(indent=2) + "\n")


def load_model(cls: Type[M], path: Union[str, Path]) -> M:
    """Parse a JSON artifact.

    Raises:
        ValidationError: If the file is missing or does not match the model
    """
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"File not found: {path}", "path")
    try:
        return cls.model_validate_json(path.read_text(encoding="utf-8"))
    except pydantic.ValidationError as e:
        raise ValidationError(f"{path} is not a valid {cls.__name__}: {e.error_count()} problem(s)", "path") from e


def catalog_to_model(lattice: SubgroupLattice, systems, saturated_only: bool = False) -> TransferSystemCatalogModel:
    items = [transfer_system_to_model(s) for s in systems]
    return TransferSystemCatalogModel(group=lattice.group.label, count=len(items),
                                      saturated_only=saturated_only, systems=items)


def negative_to_model(report: NegativeReport, table: Optional[CharacterTable] = None) -> NegativeModel:
    if table is None:
        table = elementary_rank3(report.p)
    return NegativeModel(p=report.p, plane=report.plane, edges=report.edges, explicit_form=report.explicit_form,
                         unrealizable=report.unrealizable, search=search_to_model(table, report.outcome),
                         elapsed_ms=round(report.elapsed_ms, 3))
