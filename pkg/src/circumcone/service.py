"""HTTP facade over the handlers.

Domain failures (bad geometry, infeasible points, unsupported exact
queries) map to 400 with the error class name; malformed payloads get
FastAPI's standard 422.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import handlers
from .errors import CircumconeError
from .schemas import (
    BregmanRequest,
    BregmanResponse,
    CircumRequest,
    CircumResponse,
    CsvResponse,
    DepthRequest,
    DepthResponse,
    FcpgRequest,
    FigureRequest,
    StepRequest,
    StepResponse,
    VerifyRequest,
    VerifyResponse,
    ZooRequest,
    ZooResponse,
)

app = FastAPI(title="circumcone", version="0.1.0")


def _guard(fn, req):
    try:
        return fn(req)
    except CircumconeError as exc:
        raise HTTPException(
            status_code=400,
            detail={"error": type(exc).__name__, "message": str(exc)},
        ) from exc
    except ValueError as exc:
        raise HTTPException(
            status_code=400,
            detail={"error": "ValueError", "message": str(exc)},
        ) from exc


@app.post("/circum", response_model=CircumResponse)
def circum(req: CircumRequest) -> CircumResponse:
    return _guard(handlers.compute_circum, req)


@app.post("/depth", response_model=DepthResponse)
def depth(req: DepthRequest) -> DepthResponse:
    return _guard(handlers.compute_depth, req)


@app.post("/step", response_model=StepResponse)
def step(req: StepRequest) -> StepResponse:
    return _guard(handlers.compute_step, req)


@app.post("/zoo", response_model=ZooResponse)
def zoo(req: ZooRequest) -> ZooResponse:
    return _guard(handlers.compute_zoo, req)


@app.post("/bregman", response_model=BregmanResponse)
def bregman(req: BregmanRequest) -> BregmanResponse:
    return _guard(handlers.compute_bregman, req)


@app.post("/fcpg", response_model=CsvResponse)
def fcpg(req: FcpgRequest) -> CsvResponse:
    return _guard(handlers.run_fcpg_csv, req)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    return _guard(handlers.run_verify, req)


@app.post("/figure", response_model=CsvResponse)
def figure(req: FigureRequest) -> CsvResponse:
    return _guard(handlers.figure_csv, req)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}
