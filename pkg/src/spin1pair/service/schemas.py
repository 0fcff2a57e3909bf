"""Request and response bodies for the HTTP service.

All float fields reject non-finite values at the schema boundary, so the
library below only ever sees finite numbers.
"""

from pydantic import BaseModel, Field


class AxisModel(BaseModel):
    """Inclusive linear grid along one axis."""

    start: float = Field(allow_inf_nan=False)
    stop: float = Field(allow_inf_nan=False)
    count: int = Field(ge=1)


class SpectrumRequest(BaseModel):
    K: float = Field(allow_inf_nan=False)
    B: float = Field(allow_inf_nan=False)
    J: float = Field(default=0.0, allow_inf_nan=False)


class SpectrumRow(BaseModel):
    label: str
    analytic_energy: float
    numeric_energy: float
    abs_diff: float


class SpectrumResponse(BaseModel):
    rows: list[SpectrumRow]


class NegativityRequest(BaseModel):
    K: float = Field(allow_inf_nan=False)
    B: float = Field(allow_inf_nan=False)
    T: float = Field(allow_inf_nan=False)
    J: float = Field(default=0.0, allow_inf_nan=False)


class NegativityResponse(BaseModel):
    K: float
    B: float
    T: float
    negativity: float


class CouplingsRequest(BaseModel):
    t: float = Field(allow_inf_nan=False)
    U0: float = Field(allow_inf_nan=False)
    U2: float = Field(allow_inf_nan=False)


class CouplingsResponse(BaseModel):
    J: float
    K: float
    epsilon: float


class SweepRequest(BaseModel):
    K_axis: AxisModel
    B_axis: AxisModel
    T_axis: AxisModel
    J: float = Field(default=0.0, allow_inf_nan=False)


class TableResponse(BaseModel):
    """Generic header-plus-rows table; rows mix labels and numbers."""

    header: list[str]
    rows: list[list[float]]


class FigureRequest(BaseModel):
    k_axis: AxisModel | None = None
    b_axis: AxisModel | None = None
    t_axis: AxisModel | None = None


class CriticalFieldRequest(BaseModel):
    K: float = Field(allow_inf_nan=False)
    T: float = Field(allow_inf_nan=False)
    threshold: float = Field(default=1e-9, allow_inf_nan=False)
    tol: float = Field(default=1e-6, allow_inf_nan=False, gt=0)


class CriticalTemperatureRequest(BaseModel):
    K: float = Field(allow_inf_nan=False)
    B: float = Field(allow_inf_nan=False)
    threshold: float = Field(default=1e-9, allow_inf_nan=False)
    tol: float = Field(default=1e-6, allow_inf_nan=False, gt=0)


class CriticalCouplingRequest(BaseModel):
    T: float = Field(allow_inf_nan=False)
    B: float = Field(default=0.0, allow_inf_nan=False)
    threshold: float = Field(default=1e-9, allow_inf_nan=False)
    tol: float = Field(default=1e-6, allow_inf_nan=False, gt=0)


class CriticalPointModel(BaseModel):
    parameter: str
    crossing: str
    bracket_low: float
    bracket_high: float
    estimate: float
    residual_negativity: float


class CriticalPointsResponse(BaseModel):
    points: list[CriticalPointModel]
