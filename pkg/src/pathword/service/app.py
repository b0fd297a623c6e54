"""HTTP wire protocol over the auth service.

    POST   /enroll                    201 {record} | 409 duplicate | 422 bad input
    POST   /challenge                 200 {challenge_id, diagram, expires_at} | 404
    POST   /verify                    200 {outcome}
    DELETE /enrollment/{user}/{label} 204 | 404
    GET    /health                    200 {status}

Bodies are JSON; the diagram and path objects use the structured encodings
from the library codecs (see README for the exact schemas).  Transport
security is a deployment concern and out of scope here.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from ..errors import DuplicateEnrollmentError, PathwordError, UnknownEnrollmentError
from ..diagram import diagram_to_dict
from ..path import path_from_dict, path_to_dict
from .core import AuthService, GridParams


class PathBody(BaseModel):
    rows: int
    cols: int
    steps: list[tuple[int, int]]


class GridParamsBody(BaseModel):
    alphabet: dict
    rows: int
    cols: int


class EnrollBody(BaseModel):
    user: str = Field(min_length=1)
    label: str = Field(min_length=1)
    path: PathBody
    grid_params: GridParamsBody


class ChallengeBody(BaseModel):
    user: str = Field(min_length=1)
    label: str = Field(min_length=1)


class VerifyBody(BaseModel):
    challenge_id: str
    password: str


def create_app(service: AuthService) -> FastAPI:
    app = FastAPI(title="pathword service")
    # The browser client is served from a separate static origin.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/enroll", status_code=201)
    def enroll(body: EnrollBody) -> dict:
        try:
            path = path_from_dict(body.path.model_dump())
            params = GridParams.from_dict(body.grid_params.model_dump())
            record = service.enroll(body.user, body.label, path, params)
        except DuplicateEnrollmentError as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from exc
        except PathwordError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return {
            "user": record.user,
            "label": record.label,
            "path": path_to_dict(record.path),
            "grid_params": record.grid_params.to_dict(),
            "created_at": record.created_at.isoformat(),
        }

    @app.post("/challenge")
    def challenge(body: ChallengeBody) -> dict:
        try:
            issued = service.issue_challenge(body.user, body.label)
        except UnknownEnrollmentError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return {
            "challenge_id": issued.id,
            "diagram": diagram_to_dict(issued.diagram),
            "expires_at": issued.expires_at.isoformat(),
        }

    @app.post("/verify")
    def verify(body: VerifyBody) -> dict:
        result = service.verify(body.challenge_id, body.password)
        return {"outcome": result.outcome.value}

    @app.delete("/enrollment/{user}/{label}", status_code=204)
    def revoke(user: str, label: str) -> Response:
        try:
            service.revoke(user, label)
        except UnknownEnrollmentError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return Response(status_code=204)

    return app
