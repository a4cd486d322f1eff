"""Pydantic request/response models for the compute service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class IdealJSON(BaseModel):
    n: int
    gens: list[list[int]]


class IdealRequest(BaseModel):
    """Every compute endpoint accepts an ideal as text or as exponent rows."""

    ideal_text: Optional[str] = None
    ideal: Optional[IdealJSON] = None


class ParseRequest(BaseModel):
    text: str


class ParseResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    ideal: IdealJSON
    canonical: str


class BettiRequest(IdealRequest):
    field: str = "qq"


class BettiEntry(BaseModel):
    i: int
    j: int
    dim: int


class CornerEntry(BaseModel):
    t: int
    r: int
    dim: int


class BettiResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    field: str
    entries: list[BettiEntry]
    regularity: int
    ideal_regularity: int
    corners: list[CornerEntry]
    diagram: str


class HomologyRequest(IdealRequest):
    i: int
    field: str = "qq"
    multidegree: Optional[list[int]] = None
    representatives: bool = True


class ChainJSON(BaseModel):
    i: int
    terms: list[dict]


class StrandReport(BaseModel):
    multidegree: list[int]
    strand_dim: int
    cycles: int
    boundaries: int
    betti: int
    representatives: list[ChainJSON] = Field(default_factory=list)


class HomologyResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    field: str
    i: int
    total: int
    strands: list[StrandReport]


class CyclesRequest(IdealRequest):
    i: int
    field: str = "qq"
    max_length: int = 4
    multidegree: Optional[list[int]] = None


class CycleStrandReport(BaseModel):
    multidegree: list[int]
    status: str
    strand_dim: int
    betti: int
    spanning_length: Optional[int]
    note: str = ""


class CyclesResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    field: str
    i: int
    bound_exceeded: bool
    strands: list[CycleStrandReport]


class PBorelRequest(BaseModel):
    monomial: list[int]
    p: int


class PBorelResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    p: int
    alpha: list[list[int]]
    ideal: IdealJSON
    canonical: str
    generator_count: int
    is_p_borel: bool
    is_strongly_stable: bool


class ChainStageJSON(BaseModel):
    index: int
    n_stage: int
    top_socle_degree: int
    corner_dimension: int
    restricted: IdealJSON
    saturated: IdealJSON


class ChainResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    stages: list[ChainStageJSON]
    corner_candidates: list[CornerEntry]


class VerifyRequest(BaseModel):
    suite: str
    seed: str = "0"
    trials: Optional[int] = None


class VerifyResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    suite: str
    passed: bool
    requested: int
    performed: int
    elapsed: float
    refutations: list[dict]
    notes: list[str]
    counters: dict


class ReproduceRequest(BaseModel):
    example: str


class CheckJSON(BaseModel):
    name: str
    expected: str
    actual: str
    ok: bool


class ReproduceResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    example: str
    passed: bool
    checks: list[CheckJSON]


class HealthResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    status: str = "ok"
    examples: list[str]
    suites: list[str]


class ErrorResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    error: str
    kind: str
