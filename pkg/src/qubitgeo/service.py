"""HTTP front end exposing the report builders over JSON.

Run with:  uvicorn qubitgeo.service:app

Request and response bodies mirror the CLI's state-file and report
documents.  Domain input problems map to 400, semantic refusals (such as
factoring an entangled state) to 409, and schema violations to FastAPI's
standard 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import reports
from .statefile import StateFileError, doc_to_state, state_to_doc
from .two_qubit import NotProductStateError

app = FastAPI(
    title="qubitgeo",
    description="Geometry and entanglement classification of 1-3 qubit pure states",
    version="0.1.0",
)


class StatePayload(BaseModel):
    """State-file document: amplitudes in big-endian basis order."""

    qubits: int = Field(ge=1, le=3)
    amplitudes: list[tuple[float, float]]


class DistanceRequest(BaseModel):
    state_a: StatePayload
    state_b: StatePayload


class ConstructRequest(BaseModel):
    name: str
    theta: float = 0.0
    phi: float = 0.0
    party: int = Field(default=1, ge=1, le=3)
    m: int = Field(default=0, ge=-1, le=1)


class OrbitRequest(BaseModel):
    state: StatePayload
    trials: int = Field(default=100, ge=1)
    seed: int = 0


class RandomRequest(BaseModel):
    qubits: int = Field(default=3, ge=1, le=3)
    seed: int = 0


class ClassifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int
    qubits: int
    slocc_class: str = Field(alias="class")
    tau: float
    local_ranks: list[int]
    memberships: dict[str, bool]


class DistanceResponse(BaseModel):
    schema_version: int
    angle: float
    transition_probability: float


class BlochResponse(BaseModel):
    schema_version: int
    bloch: list[float]
    radius: float
    eigenvalues: list[float]
    theta: float
    phi: float


class FactorResponse(BaseModel):
    schema_version: int
    factor1: StatePayload
    factor2: StatePayload


class OrbitResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int
    slocc_class: str = Field(alias="class")
    tau_initial: float
    trials: int
    seed: int
    preserved: int
    class_preserved: bool
    det_rel_drift_max: float
    tau_min: float
    tau_max: float


def _state(payload: StatePayload, qubits: int | None = None):
    try:
        return doc_to_state(payload.model_dump(), qubits=qubits)
    except StateFileError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "schema_version": reports.SCHEMA_VERSION}


@app.post("/classify", response_model=ClassifyResponse)
def classify(state: StatePayload):
    return reports.classify_report(_state(state, qubits=3))


@app.post("/invariants")
def invariants(state: StatePayload) -> dict:
    return reports.invariants_report(_state(state))


@app.post("/distance", response_model=DistanceResponse)
def distance(request: DistanceRequest):
    a = _state(request.state_a)
    b = _state(request.state_b)
    try:
        return reports.distance_report(a, b)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/bloch", response_model=BlochResponse)
def bloch(state: StatePayload):
    return reports.bloch_report(_state(state, qubits=1))


@app.post("/factor", response_model=FactorResponse)
def factor(state: StatePayload):
    try:
        return reports.factor_report(_state(state, qubits=2))
    except NotProductStateError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc


@app.post("/orbit-check", response_model=OrbitResponse)
def orbit_check(request: OrbitRequest):
    return reports.orbit_report(
        _state(request.state, qubits=3), trials=request.trials, seed=request.seed
    )


@app.post("/construct", response_model=StatePayload)
def construct(request: ConstructRequest):
    try:
        state = reports.construct_state(
            request.name,
            theta=request.theta,
            phi=request.phi,
            party=request.party,
            m=request.m,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return state_to_doc(state)


@app.post("/random", response_model=StatePayload)
def random_state(request: RandomRequest):
    return reports.random_state_doc(request.qubits, request.seed)
