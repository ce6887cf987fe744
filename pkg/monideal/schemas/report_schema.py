"""Pydantic schemas describing how a result was computed."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class StageReport(BaseModel):
    """One pipeline stage: the ring it ran in and the size of its basis."""

    name: str
    variables: List[str]
    order: str
    basis_size: int
    elapsed_ms: float


class ComputationReport(BaseModel):
    """Provenance of a result. Informational only; never read back by the algorithms."""

    operation: str
    field: str
    variables: List[str]
    order: str
    input_generators: int
    grading_shape: Optional[Tuple[int, int]] = None
    stages: List[StageReport] = Field(default_factory=list)
    flags: List[str] = Field(default_factory=list)
    output_generators: Optional[int] = None
