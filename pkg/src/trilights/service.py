"""JSON HTTP facade over the engine.

Stateless: every request carries the full game state (size + bitstring
config), all responses are deterministic given the request (plus seed
for /api/random).  Configs are the engine's bitstring form; button ids
are 1-based.  Status codes: 400 malformed input, 422 unsolvable where a
solution is required, 500 internal verification failure.
"""

from __future__ import annotations

import secrets
from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import engine, matchings, propagation
from .board import geometry
from .engine import Configuration, PressSet
from .errors import TrilightsError, VerificationError


class PressRequest(BaseModel):
    n: int
    config: str
    buttons: list[int]


class SolveRequest(BaseModel):
    n: int
    config: str


class PropagateRequest(BaseModel):
    n: int
    element: str
    j: int


def create_app(static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="trilights", docs_url="/api/docs", openapi_url="/api/openapi.json")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(VerificationError)
    async def _verification(request: Request, exc: VerificationError):
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.exception_handler(TrilightsError)
    async def _bad_input(request: Request, exc: TrilightsError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/api/board/{n}")
    def board_info(n: int):
        geo = geometry(n)
        return {
            "n": n,
            "beta": geo.beta,
            "neighbors": [[j + 1 for j in row] for row in geo.neighbors],
        }

    @app.post("/api/press")
    def press(req: PressRequest):
        config = Configuration.from_string(req.n, req.config)
        presses = PressSet.from_ids(req.n, req.buttons)
        return {"config": engine.press(config, presses).to_string()}

    @app.post("/api/solve")
    def solve(req: SolveRequest):
        config = Configuration.from_string(req.n, req.config)
        report = engine.solve_config(config, engine.default_enum_cap())
        return report.to_json_dict()

    @app.post("/api/hint")
    def hint(req: SolveRequest):
        config = Configuration.from_string(req.n, req.config)
        report = engine.solve_config(config, engine.default_enum_cap())
        if not report.solvable:
            raise HTTPException(status_code=422, detail="configuration is unsolvable")
        ids = report.canonical.ids()
        if not ids:
            raise HTTPException(status_code=422, detail="already solved: nothing to press")
        return {"button": ids[0]}

    @app.get("/api/kernel/{n}")
    def kernel(n: int, enumerate: bool = Query(default=False)):
        dim = engine.kernel_dimension(n)
        basis = engine.kernel_basis(n)
        body = {"dimension": dim, "basis": [b.to_string() for b in basis]}
        if enumerate:
            elements = engine.enumerate_kernel(n, engine.default_enum_cap())
            if elements is not None:
                body["elements"] = [e.to_string() for e in elements]
        return body

    @app.get("/api/random/{n}")
    def random_config(n: int, seed: Optional[int] = Query(default=None)):
        if seed is None:
            seed = secrets.randbelow(2**32)
        config = engine.random_solvable(n, seed)
        return {"config": config.to_string(), "seed": seed, "rng": engine.RNG_NAME}

    @app.get("/api/table")
    def table(from_n: int = Query(alias="from"), to_n: int = Query(alias="to")):
        return [{"n": n, "dimension": d} for n, d in engine.dimension_table(from_n, to_n)]

    @app.get("/api/matchings/{n}")
    def matchings_info(n: int):
        body = {"parity": matchings.coverings_parity(n)}
        if n <= matchings.COUNT_MAX_SIZE:
            body["count"] = matchings.count_coverings(n)
        return body

    @app.post("/api/propagate")
    def propagate(req: PropagateRequest):
        source = PressSet.from_string(req.n, req.element)
        result = propagation.propagate(source, req.j)
        return {"m": result.n, "element": result.to_string(), "verified": True}

    @app.get("/api/layout/{n}/{j}")
    def layout(n: int, j: int):
        lay = propagation.block_layout(n, j)
        return {
            "n": n,
            "j": j,
            "m": lay.m,
            "blocks": [
                {
                    "band": b.band,
                    "slot": b.slot,
                    "orientation": b.orientation,
                    "symmetry": b.symmetry.name,
                    "cells": [c + 1 for c in b.cells],
                }
                for b in lay.blocks
            ],
            "separator": [c + 1 for c in lay.separator],
        }

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
