"""FastAPI application exposing the library over HTTP.

Domain errors (invalid physical inputs, failed searches) map to status 400
with a body naming the error case; malformed requests are rejected by the
schemas with status 422.  All endpoints are stateless and deterministic.
"""

from fastapi import FastAPI, HTTPException, Path
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..analysis import (
    AxisSpec,
    SweepSpec,
    critical_coupling,
    critical_field,
    critical_temperature,
    negativity_point,
    sweep,
)
from ..errors import DomainError
from ..figures import figure_table
from ..model import ModelParams, analytic_spectrum, build_hamiltonian, derive_couplings
from ..numerics import eigh_symmetric
from .schemas import (
    CouplingsRequest,
    CouplingsResponse,
    CriticalCouplingRequest,
    CriticalFieldRequest,
    CriticalPointModel,
    CriticalPointsResponse,
    CriticalTemperatureRequest,
    FigureRequest,
    NegativityRequest,
    NegativityResponse,
    SpectrumRequest,
    SpectrumResponse,
    SpectrumRow,
    SweepRequest,
    TableResponse,
)


def _critical_point_model(cp):
    return CriticalPointModel(
        parameter=cp.parameter,
        crossing=cp.crossing,
        bracket_low=cp.bracket[0],
        bracket_high=cp.bracket[1],
        estimate=cp.estimate,
        residual_negativity=cp.residual_negativity,
    )


def create_app():
    app = FastAPI(title="spin1pair", version=__version__)

    @app.exception_handler(DomainError)
    async def domain_error_handler(request, exc):
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(request, exc):
        # deliberately omit the offending input echo: a non-finite float in
        # the request would itself be unserializable in the error body
        errors = [
            {
                "loc": [str(part) for part in e.get("loc", ())],
                "msg": str(e.get("msg", "")),
                "type": str(e.get("type", "")),
            }
            for e in exc.errors()
        ]
        return JSONResponse(status_code=422, content={"detail": errors})

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/spectrum", response_model=SpectrumResponse)
    def spectrum(req: SpectrumRequest):
        p = ModelParams(K=req.K, B=req.B, J=req.J)
        levels = analytic_spectrum(p).sorted_levels()
        numeric = eigh_symmetric(build_hamiltonian(p)).eigenvalues
        rows = [
            SpectrumRow(
                label=lv.label,
                analytic_energy=lv.energy,
                numeric_energy=float(num),
                abs_diff=abs(lv.energy - float(num)),
            )
            for lv, num in zip(levels, numeric)
        ]
        return SpectrumResponse(rows=rows)

    @app.post("/negativity", response_model=NegativityResponse)
    def negativity_endpoint(req: NegativityRequest):
        n = negativity_point(req.K, req.B, req.T, req.J)
        return NegativityResponse(K=req.K, B=req.B, T=req.T, negativity=n)

    @app.post("/couplings", response_model=CouplingsResponse)
    def couplings(req: CouplingsRequest):
        c = derive_couplings(req.t, req.U0, req.U2)
        return CouplingsResponse(J=c.J, K=c.K, epsilon=c.epsilon)

    @app.post("/sweep", response_model=TableResponse)
    def sweep_endpoint(req: SweepRequest):
        spec = SweepSpec(
            K_axis=AxisSpec(req.K_axis.start, req.K_axis.stop, req.K_axis.count),
            B_axis=AxisSpec(req.B_axis.start, req.B_axis.stop, req.B_axis.count),
            T_axis=AxisSpec(req.T_axis.start, req.T_axis.stop, req.T_axis.count),
            J=req.J,
        )
        result = sweep(spec)
        return TableResponse(header=list(result.header), rows=result.rows.tolist())

    @app.post("/figures/{n}", response_model=TableResponse)
    def figure_endpoint(req: FigureRequest, n: int = Path(ge=1, le=3)):
        try:
            header, rows = figure_table(
                n, k_axis=req.k_axis, b_axis=req.b_axis, t_axis=req.t_axis
            )
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return TableResponse(
            header=header, rows=[[float(v) for v in row] for row in rows]
        )

    @app.post("/critical/field", response_model=CriticalPointModel)
    def critical_field_endpoint(req: CriticalFieldRequest):
        cp = critical_field(req.K, req.T, threshold=req.threshold, tol=req.tol)
        return _critical_point_model(cp)

    @app.post("/critical/temperature", response_model=CriticalPointsResponse)
    def critical_temperature_endpoint(req: CriticalTemperatureRequest):
        points = critical_temperature(req.K, req.B, threshold=req.threshold, tol=req.tol)
        return CriticalPointsResponse(points=[_critical_point_model(cp) for cp in points])

    @app.post("/critical/coupling", response_model=CriticalPointModel)
    def critical_coupling_endpoint(req: CriticalCouplingRequest):
        cp = critical_coupling(req.T, B=req.B, threshold=req.threshold, tol=req.tol)
        return _critical_point_model(cp)

    return app
