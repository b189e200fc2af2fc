"""HTTP service wrapping the core solvers.

The handler functions here are plain dict-in/dict-out and hold all request
orchestration; the FastAPI app and the CLI both call them, so the two
front ends cannot drift apart. Physics-domain failures map to HTTP 409,
malformed values to 422.
"""

from __future__ import annotations

from typing import List, Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__, limits, oracle, tables
from .errors import PhysicsDomainError
from .states import PhysicalParams, StateIndex


class ParamsModel(BaseModel):
    M: float = Field(5.0, description="mass (fm^-1)")
    A: float = Field(1.0, description="dimensionless coupling")
    alpha: float = Field(0.1, description="screening parameter (fm^-1)")
    C_sym: float = Field(0.0, description="symmetry constant (C_s or C_ps, fm^-1)")

    def to_params(self) -> PhysicalParams:
        return PhysicalParams(M=self.M, A=self.A, alpha=self.alpha, C_sym=self.C_sym)


class StateModel(BaseModel):
    n: int = Field(ge=0)
    kappa: int

    def to_state(self) -> StateIndex:
        return StateIndex(n=self.n, kappa=self.kappa)


class TableRequest(BaseModel):
    table_id: Literal["table2", "table3", "table4", "table5"]
    diff: bool = False


class SpectrumRequest(BaseModel):
    params: ParamsModel = ParamsModel()
    state: StateModel
    branch: Literal["spin", "pseudospin"] = "spin"


class SweepRequest(BaseModel):
    param: Literal["A", "alpha", "C_sym"]
    lo: float
    hi: float
    step: float
    params: ParamsModel = ParamsModel()
    states: List[StateModel]
    branch: Literal["spin", "pseudospin"] = "spin"


class WavefunctionRequest(BaseModel):
    params: ParamsModel = ParamsModel()
    state: StateModel
    branch: Literal["spin", "pseudospin"] = "spin"
    which: Literal["plus", "minus"] = "plus"
    points: int = Field(512, ge=2, le=100000)
    r_max: Optional[float] = Field(None, gt=0.0)


class OracleRequest(BaseModel):
    potential: Literal["yukawa", "approx", "coulomb"]
    mass: float = 1.0
    A: float
    alpha: float = 0.0
    n: int = Field(ge=0)
    l: int = Field(ge=0)
    h: float = Field(1e-3, gt=0.0)


def handle_table(req: TableRequest) -> dict:
    result = tables.build_table(req.table_id, diff=req.diff)
    params = tables.load_reference()[req.table_id]["params"]
    return {"result": result, "params": params, "command": f"table {req.table_id}" + (" --diff" if req.diff else "")}


def handle_spectrum(req: SpectrumRequest) -> dict:
    row = tables.run_spectrum(req.params.to_params(), req.state.to_state(), req.branch)
    return {
        "result": {"rows": [row], "columns": None},
        "params": req.params.model_dump(),
        "command": "spectrum",
    }


def handle_sweep(req: SweepRequest) -> dict:
    result = tables.run_sweep(
        req.param,
        req.lo,
        req.hi,
        req.step,
        req.params.to_params(),
        [s.to_state() for s in req.states],
        req.branch,
    )
    return {"result": result, "params": req.params.model_dump(), "command": f"sweep {req.param}"}


def handle_wavefunction(req: WavefunctionRequest) -> dict:
    result = tables.run_wavefunction(
        req.params.to_params(),
        req.state.to_state(),
        req.branch,
        which=req.which,
        points=req.points,
        r_max=req.r_max,
    )
    return {"result": result, "params": req.params.model_dump(), "command": "wavefunction"}


def handle_oracle(req: OracleRequest) -> dict:
    kind = oracle.PotentialKind(req.potential)
    prob = oracle.RadialProblem(mass=req.mass, l=req.l, kind=kind, A=req.A, alpha=req.alpha, h=req.h)
    res = oracle.shoot_eigenvalue(prob, req.n)
    row = {
        "potential": req.potential,
        "n": req.n,
        "l": req.l,
        "energy": res.energy if res.converged else "UNCONVERGED",
        "node_count": res.node_count,
        "converged": res.converged,
        "residual": res.residual,
    }
    if kind is not oracle.PotentialKind.COULOMB:
        analytic = limits.nonrel_energy(limits.NonRelParams(m=req.mass, A=req.A, alpha=req.alpha, n=req.n, l=req.l))
        row["analytic_approx"] = analytic.energy
        row["analytic_bound"] = analytic.bound
    return {"result": {"rows": [row], "columns": None}, "params": req.model_dump(), "command": "oracle"}


app = FastAPI(title="dirac-yukawa", version=__version__)


@app.exception_handler(PhysicsDomainError)
async def _physics_error(_: Request, exc: PhysicsDomainError):
    return JSONResponse(status_code=409, content={"error": "physics-domain", "detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(_: Request, exc: ValueError):
    return JSONResponse(status_code=422, content={"error": "validation", "detail": str(exc)})


def _payload(handled: dict) -> dict:
    import json as _json

    return _json.loads(tables.to_json(handled["result"], handled["params"], handled["command"]))


@app.post("/table")
async def table_endpoint(req: TableRequest) -> dict:
    return _payload(handle_table(req))


@app.post("/spectrum")
async def spectrum_endpoint(req: SpectrumRequest) -> dict:
    return _payload(handle_spectrum(req))


@app.post("/sweep")
async def sweep_endpoint(req: SweepRequest) -> dict:
    return _payload(handle_sweep(req))


@app.post("/wavefunction")
async def wavefunction_endpoint(req: WavefunctionRequest) -> dict:
    return _payload(handle_wavefunction(req))


@app.post("/oracle")
async def oracle_endpoint(req: OracleRequest) -> dict:
    return _payload(handle_oracle(req))


@app.get("/healthz")
async def healthz() -> dict:
    return {"status": "ok", "version": __version__}
