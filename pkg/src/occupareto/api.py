"""Stateless HTTP facade for the frontier and trajectory computations.

JSON field names follow the model's notation (n, n_v, beta_u, ...). Every
request is computed from scratch; identical bodies produce identical
responses. Invariant violations in the payload map to 400 with field-level
messages, except prod >= 1 which maps to 422 with the trivial-optimum
explanation. Bind address and port come from the OCCUPARETO_HOST /
OCCUPARETO_PORT environment variables; allowed CORS origins from
OCCUPARETO_CORS_ORIGINS (comma separated, default "*").
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .epidemic import arrival_probability, trajectory_two_group
from .params import OrganizationParams, ParameterError
from .pareto import pareto_sweep
from .pipeline import DEFAULT_PIPELINE, ObjectivePipeline


class ApiRequest(BaseModel):
    n: int
    n_v: int = 0
    beta_u: float = 0.04
    beta_v: float = 0.008
    prod: float = 0.6
    tau: int = 7
    contact_base: float = 5.0
    contact_slope: float = 0.10
    incidence_7day: float = 500.0
    occupancy_threshold: float = 0.0
    occup: float | None = Field(default=None, description="trajectory only")
    horizon: int | None = Field(default=None, description="trajectory only")
    pipeline: str = DEFAULT_PIPELINE.estimator


class TrivialOptimumError(Exception):
    def __init__(self, message: str):
        self.message = message


def _params_from(req: ApiRequest) -> OrganizationParams:
    if req.prod >= 1.0:
        raise TrivialOptimumError(
            f"prod={req.prod} >= 1 leaves no trade-off: home work is at least as "
            f"productive as on-site work, so the optimum is trivially occup = 0 "
            f"(minimum workplace infections at no productivity cost)."
        )
    return OrganizationParams(
        n=req.n, n_v=req.n_v, beta_u=req.beta_u, beta_v=req.beta_v,
        prod=req.prod, tau=req.tau, contact_base=req.contact_base,
        contact_slope=req.contact_slope, incidence_7day=req.incidence_7day,
        occupancy_threshold=req.occupancy_threshold,
    )


def _metadata(req: ApiRequest) -> dict:
    return {"pipeline": req.pipeline, "engine_version": __version__}


def create_app() -> FastAPI:
    app = FastAPI(title="occupareto", version=__version__)
    origins = os.environ.get("OCCUPARETO_CORS_ORIGINS", "*").split(",")
    app.add_middleware(
        CORSMiddleware, allow_origins=origins, allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(ParameterError)
    async def parameter_error(request: Request, exc: ParameterError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def request_validation_error(request: Request, exc: RequestValidationError):
        fields = [
            {"field": ".".join(str(p) for p in err["loc"] if p != "body"),
             "message": err["msg"]}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": fields})

    @app.exception_handler(TrivialOptimumError)
    async def trivial_optimum(request: Request, exc: TrivialOptimumError):
        return JSONResponse(status_code=422, content={"detail": exc.message})

    @app.get("/api/health")
    def health():
        return {"status": "ok", "engine_version": __version__}

    @app.post("/api/pareto")
    def pareto(req: ApiRequest):
        params = _params_from(req)
        frontier = pareto_sweep(params, ObjectivePipeline(estimator=req.pipeline))
        return {
            "params": _echo(params),
            "background_risk": arrival_probability(params),
            "frontier": [
                {
                    "occup": p.occup,
                    "present_count": p.present_count,
                    "expected_infections": p.expected_infections,
                    "total_productivity": p.total_productivity,
                    "total_productivity_normalized": p.total_productivity / params.n,
                    "tau_bar": p.tau_bar,
                }
                for p in frontier.points
            ],
            "metadata": _metadata(req),
        }

    @app.post("/api/trajectory")
    def trajectory(req: ApiRequest):
        params = _params_from(req)
        occup = 1.0 if req.occup is None else req.occup
        horizon = params.tau if req.horizon is None else req.horizon
        traj = trajectory_two_group(params, occup, horizon)
        return {
            "params": _echo(params),
            "background_risk": arrival_probability(params),
            "occup": occup,
            "days": list(range(horizon + 1)),
            "p_u": [float(x) for x in traj.p_u],
            "p_v": [float(x) for x in traj.p_v],
            "expected_infected": [float(x) for x in traj.expected_infected],
            "metadata": _metadata(req),
        }

    return app


def _echo(params: OrganizationParams) -> dict:
    return {
        "n": params.n, "n_v": params.n_v, "beta_u": params.beta_u,
        "beta_v": params.beta_v, "prod": params.prod, "tau": params.tau,
        "contact_base": params.contact_base, "contact_slope": params.contact_slope,
        "incidence_7day": params.incidence_7day,
        "occupancy_threshold": params.occupancy_threshold,
    }


app = create_app()


def serve() -> None:
    import uvicorn

    uvicorn.run(
        "occupareto.api:app",
        host=os.environ.get("OCCUPARETO_HOST", "127.0.0.1"),
        port=int(os.environ.get("OCCUPARETO_PORT", "8000")),
    )


if __name__ == "__main__":
    serve()
