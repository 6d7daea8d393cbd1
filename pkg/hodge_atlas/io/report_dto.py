from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, model_validator


class GradingDto(BaseModel):
    m: int
    # [character, sign, p, q, h]
    pieces: List[Tuple[int, str, int, int, int]] = []


class HodgeStructureDto(BaseModel):
    weight: int
    # [p, q, h]
    dims: List[Tuple[int, int, int]] = []
    grading: Optional[GradingDto] = None


class HodgeFamilyDto(BaseModel):
    dim: int
    levels: List[HodgeStructureDto]
    connected: bool = True
    primitive: bool = False


class CMStatusDto(BaseModel):
    state: str = "Unknown"
    provenance: List[str] = []


class CYWithInvolutionDto(BaseModel):
    name: Optional[str] = None
    dim: int
    levels: List[HodgeStructureDto]
    ramification: HodgeFamilyDto
    cm: List[CMStatusDto] = []


class BaseSpecDto(BaseModel):
    """
    One tower base: either a named preset (``elliptic``) or explicit Hodge data.
    """

    name: str
    preset: Optional[str] = None
    cm: Optional[str] = None
    cy: Optional[CYWithInvolutionDto] = None

    class Config:
        extra = "forbid"

    @model_validator(mode="after")
    def _one_source(self):
        if (self.preset is None) == (self.cy is None):
            raise ValueError(f"base {self.name!r} needs exactly one of 'preset' and 'cy'")
        return self


class TowerSpecDto(BaseModel):
    bases: List[BaseSpecDto]

    class Config:
        extra = "forbid"


class BVStepReportDto(BaseModel):
    output: CYWithInvolutionDto
    kunneth: List[HodgeStructureDto]
    invariant: List[HodgeStructureDto]
    exceptional: List[HodgeStructureDto]
    cm_trace: List[CMStatusDto]


class EigenTableDto(BaseModel):
    m: int
    genus: int
    # [j, h10, h01]
    entries: List[Tuple[int, int, int]]
    r_values: List[int] = []


class PeriodValueDto(BaseModel):
    re: str
    im: str
    err: str
    precision: str
    method: str = ""


class PeriodTableDto(BaseModel):
    name: str
    reference: str = ""
    periods: Dict[str, PeriodValueDto]
    normalized: Dict[str, PeriodValueDto]


class AlgebraicityReportDto(BaseModel):
    value: PeriodValueDto
    degree_bound: str
    height_bound: str
    polynomial: Optional[List[str]] = None
    description: str = ""
    residual: Optional[str] = None
    verified_at_double_precision: bool = False
