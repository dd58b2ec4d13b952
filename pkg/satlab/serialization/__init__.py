"""JSON models and converters for satlab artifacts."""

from .codec import (
    catalog_to_model,
    certificate_to_model,
    charset_from_model,
    charset_to_model,
    diagram_from_model,
    diagram_to_model,
    inductor_from_model,
    inductor_to_model,
    lattice_to_model,
    load_model,
    negative_to_model,
    realization_to_model,
    run_to_model,
    save_model,
    search_to_model,
    tight_pair_from_model,
    tight_pair_to_model,
    transfer_system_from_model,
    transfer_system_to_model,
)
from .models import (
    CertificateModel,
    CharSetModel,
    DiagramModel,
    InductorModel,
    LatticeModel,
    NegativeModel,
    RankTwoRunModel,
    RealizationModel,
    SearchModel,
    TightPairModel,
    TransferSystemCatalogModel,
    TransferSystemModel,
)

__all__ = [
    "CertificateModel",
    "CharSetModel",
    "DiagramModel",
    "InductorModel",
    "LatticeModel",
    "NegativeModel",
    "RankTwoRunModel",
    "RealizationModel",
    "SearchModel",
    "TightPairModel",
    "TransferSystemCatalogModel",
    "TransferSystemModel",
    "catalog_to_model",
    "certificate_to_model",
    "charset_from_model",
    "charset_to_model",
    "diagram_from_model",
    "diagram_to_model",
    "inductor_from_model",
    "inductor_to_model",
    "lattice_to_model",
    "load_model",
    "negative_to_model",
    "realization_to_model",
    "run_to_model",
    "save_model",
    "search_to_model",
    "tight_pair_from_model",
    "tight_pair_to_model",
    "transfer_system_from_model",
    "transfer_system_to_model",
]
