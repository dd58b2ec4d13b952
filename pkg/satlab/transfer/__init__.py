"""Transfer systems, their enumeration, and the interior-operator correspondence."""

from .systems import (
    TransferSystem,
    TransferSystemReport,
    TransferSystemComparison,
    validate_transfer_system,
    generate_transfer_system,
    generate_saturated,
    transfer_system_from_edges,
    is_saturated,
    cofibrant_subgroups,
    fibrant_subgroups,
    leq_of_transfer_systems,
)
from .enumeration import enumerate_transfer_systems, count_saturated_direct
from .interior import (
    InteriorOperator,
    enumerate_interior_operators,
    enumerate_saturated,
    interior_to_saturated,
    saturated_to_interior,
    f_S_from_layer,
)

__all__ = [
    "TransferSystem",
    "TransferSystemReport",
    "TransferSystemComparison",
    "validate_transfer_system",
    "generate_transfer_system",
    "generate_saturated",
    "transfer_system_from_edges",
    "is_saturated",
    "cofibrant_subgroups",
    "fibrant_subgroups",
    "leq_of_transfer_systems",
    "enumerate_transfer_systems",
    "count_saturated_direct",
    "InteriorOperator",
    "enumerate_interior_operators",
    "enumerate_saturated",
    "interior_to_saturated",
    "saturated_to_interior",
    "f_S_from_layer",
]
