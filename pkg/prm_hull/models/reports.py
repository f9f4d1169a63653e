from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class CaseTag(str, Enum):
    """Which case of the hull-dimension analysis a degree falls in"""

    ZERO_DEGREE = "ZeroDegree"
    SELF_ORTHOGONAL_BOUNDARY = "SelfOrthogonalBoundary"
    LOWER_OPEN = "LowerOpen"
    UPPER_OPEN_DUAL = "UpperOpenDual"
    UPPER_BOUNDARY_SONG_LUO = "UpperBoundarySongLuo"
    ENDPOINT_LCD = "EndpointLCD"
    FULL_SPACE = "FullSpace"


class HullReport(BaseModel):
    """Hull dimension of PRM(q, m, v) with the case that produced it"""

    q: int = Field(description="Field order")
    m: int = Field(description="Projective dimension")
    v: int = Field(description="Degree of the homogeneous polynomials")
    length: int = Field(description="Code length n, the number of points of P^m(F_q)")
    case_tag: CaseTag = Field(description="Case of the analysis that applies to v")
    code_dim: int = Field(description="Dimension k of the code")
    defect: Optional[int] = Field(
        default=None,
        description="Delta_r(v) = k - dim Hull, only for degrees in an open lower interval",
    )
    hull_dim: int = Field(description="Dimension of C intersected with its dual")
    interval: Optional[int] = Field(
        default=None, description="r with v in I_r, when v is not a boundary degree"
    )
    dual_degree: Optional[int] = Field(
        default=None, description="mQ - v for the upper cases"
    )

    @model_validator(mode="after")
    def _hull_fits_in_code(self) -> "HullReport":
        if not 0 <= self.hull_dim <= self.code_dim:
            raise ValueError(
                f"hull_dim={self.hull_dim} outside 0..{self.code_dim}"
            )
        return self


class SweepResult(BaseModel):
    """One row of a verification sweep"""

    mode: str = Field(description="hull, dim, recursion, schur or blocks")
    q: int = Field(description="Field order")
    m: int = Field(description="Projective dimension, or the interval index r in structural modes")
    v: int = Field(description="Degree")
    formula_hull_dim: int = Field(description="Value predicted by the closed formulas")
    oracle_hull_dim: int = Field(description="Value computed by brute force, -1 when not computable")
    match: bool = Field(description="formula_hull_dim == oracle_hull_dim")
    elapsed_ms: int = Field(default=0, description="Wall time of the point in milliseconds")

    @model_validator(mode="after")
    def _match_is_equality(self) -> "SweepResult":
        if self.match != (self.formula_hull_dim == self.oracle_hull_dim):
            raise ValueError("match must equal formula_hull_dim == oracle_hull_dim")
        return self

    @staticmethod
    def tsv_header() -> str:
        return "\t".join(
            ["mode", "q", "m", "v", "formula_hull_dim", "oracle_hull_dim", "match", "elapsed_ms"]
        )

    def to_tsv(self) -> str:
        values = [
            self.mode,
            self.q,
            self.m,
            self.v,
            self.formula_hull_dim,
            self.oracle_hull_dim,
            str(self.match).lower(),
            self.elapsed_ms,
        ]
        return "\t".join(str(x) for x in values)


class DimReport(BaseModel):
    q: int = Field(description="Field order")
    m: int = Field(description="Projective dimension")
    v: int = Field(description="Degree")
    length: int = Field(description="Code length n")
    code_dim: int = Field(description="Dimension k of PRM(q, m, v)")


class DeltaReport(BaseModel):
    """Delta_r(v) computed three ways"""

    q: int = Field(description="Field order")
    r: int = Field(description="Interval index with v in I_r")
    v: int = Field(description="Degree")
    A: int = Field(description="Size A_r(v) of the top layer")
    delta: int = Field(description="Delta_r(v) by the two-step recursion")
    delta_closed_chain: int = Field(description="Delta_r(v) as a chain of A terms")
    delta_explicit: int = Field(description="Delta_r(v) as a triple sum of binomials")


class ACountReport(BaseModel):
    q: int = Field(description="Field order")
    r: int = Field(description="Interval index with v in I_r")
    v: int = Field(description="Degree")
    A_formula: int = Field(description="A_r(v) by inclusion-exclusion")
    A_enumerate: int = Field(description="A_r(v) by direct enumeration")
