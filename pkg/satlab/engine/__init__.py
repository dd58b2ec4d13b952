"""Diagrams, sub-inductors, tight pairs and the realization loop."""

from .diagrams import Diagram, jr_stabilize, r_stabilize, tr_of_diagram, tr_of_universe
from .inductors import (
    AXIOMS,
    AxiomCheck,
    AxiomReport,
    ComplementInductor,
    CoverReport,
    SectionInductor,
    StandardInductor,
    SubInductor,
    TensorInductor,
    check_subinductor_axioms,
    cover_nonempty,
    residue,
)
from .realize import realize, realize_diagram
from .tight import (
    HypothesisReport,
    TightPair,
    TightPairCertificate,
    check_realization_hypothesis,
    localize_tight_pairs,
    make_tight_pair,
    tensor_diagram,
    tensor_tight_pairs,
    transport_tight_pair,
    verify_tight_pair,
)

__all__ = [
    "AXIOMS",
    "AxiomCheck",
    "AxiomReport",
    "ComplementInductor",
    "CoverReport",
    "Diagram",
    "HypothesisReport",
    "SectionInductor",
    "StandardInductor",
    "SubInductor",
    "TensorInductor",
    "TightPair",
    "TightPairCertificate",
    "check_realization_hypothesis",
    "check_subinductor_axioms",
    "cover_nonempty",
    "jr_stabilize",
    "localize_tight_pairs",
    "make_tight_pair",
    "r_stabilize",
    "realize",
    "realize_diagram",
    "residue",
    "tensor_diagram",
    "tensor_tight_pairs",
    "tr_of_diagram",
    "tr_of_universe",
    "transport_tight_pair",
    "verify_tight_pair",
]
