"""Pydantic models for satlab JSON artifacts."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class SubgroupModel(BaseModel):
    """One subgroup of the lattice."""
    id: int = Field(..., ge=0)
    order: int = Field(..., ge=1)
    elements: List[List[int]]


class LatticeModel(BaseModel):
    """Subgroup lattice with its strict order relation."""
    group: str
    subgroups: List[SubgroupModel]
    leq: List[List[int]] = Field(..., description="Strict pairs [K, H] with K < H")


class CharSetModel(BaseModel):
    """Character subset of one subgroup, by canonical representatives."""
    group: str
    subgroup: int = Field(..., ge=0)
    chars: List[List[int]]


class TransferSystemModel(BaseModel):
    """Transfer system by its strict edges."""
    group: str
    edges: List[List[int]]


class DiagramModel(BaseModel):
    """Diagram values keyed by subgroup id (as a string)."""
    group: str
    values: Dict[str, List[List[int]]]


class InductorModel(BaseModel):
    """Sub-inductor description; nested for tensor products."""
    kind: str = Field(..., description="'standard', 'section', 'complement' or 'tensor'")
    primes: List[int]
    conjugate_pair: Optional[bool] = None
    diagram: Optional[DiagramModel] = None
    sections: Optional[List[Dict]] = Field(None, description="Cover sections of a section sub-inductor")
    left: Optional["InductorModel"] = None
    right: Optional["InductorModel"] = None


InductorModel.model_rebuild()


class WitnessModel(BaseModel):
    k: int
    h: int
    char: List[int]


class EscapeModel(BaseModel):
    h: int
    char: List[int]


class CertificateModel(BaseModel):
    """Tight-pair certificate with its witnesses."""
    passed: bool
    r_stable: bool
    gal_invariant: bool
    axioms: Dict[str, bool]
    witnesses: List[WitnessModel] = []
    escapes: List[EscapeModel] = []
    failures: List[str] = []


class TightPairModel(BaseModel):
    """Tight pair bundle: diagram, sub-inductor and certificate."""
    group: str
    diagram: DiagramModel
    inductor: InductorModel
    certificate: CertificateModel


class RealizationModel(BaseModel):
    """Output of a realization run."""
    group: str
    system: TransferSystemModel
    universe: CharSetModel
    method: str


class SearchModel(BaseModel):
    """Brute-force search outcome."""
    group: str
    outcome: str = Field(..., description="'witness', 'unrealizable' or 'budget'")
    searched: Optional[int] = None
    universe: Optional[CharSetModel] = None
    orbits: Optional[int] = None
    limit: Optional[int] = None


class RankTwoRunModel(BaseModel):
    """Summary of one rank-two pipeline run."""
    group: str
    seed: int
    theta: float
    success: bool
    delegated: bool = False
    failed_stage: Optional[int] = None
    best: Optional[int] = None
    failure: Optional[str] = None
    thresholds: List[int] = []
    clusteredness: List[int] = []
    retries: List[int] = []
    pair: Optional[TightPairModel] = None


class TransferSystemCatalogModel(BaseModel):
    """Every transfer system of a group, in enumeration order."""
    group: str
    count: int = Field(..., ge=0)
    saturated_only: bool = False
    systems: List[TransferSystemModel]


class NegativeModel(BaseModel):
    """Exhaustive check of the rank-3 system generated by one transfer into a plane."""
    p: int
    plane: int = Field(..., description="Subgroup id of the canonical index-p subgroup")
    edges: int = Field(..., description="Number of strict edges of the system")
    explicit_form: bool = Field(..., description="Edges are exactly K -> W with W inside the plane")
    unrealizable: bool
    search: SearchModel
    elapsed_ms: float
