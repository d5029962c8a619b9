"""Stateless HTTP JSON service for the explorer UI.

POST /solve and POST /wall wrap the solver and wall bisection; GET /types/{n}
wraps enumeration. No sessions and no persistence: every request is handled
by pure function calls, so any request order yields the same responses.
"""

import logging
import time

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from .ambiguity import find_wall
from .errors import BracketLost, DegenerateInput, DegeneratePath, LimitExceeded, NoWall
from .realization import make_configuration
from .solver import solve
from .topology import enumerate_full_types, enumerate_types, type_cap

log = logging.getLogger("steinerlab.api")


class SolveRequest(BaseModel):
    points: list[tuple[float, float]] = Field(min_length=2)
    tol: float = 1e-9
    topK: int | None = None


class WallRequest(BaseModel):
    pathStart: list[tuple[float, float]] = Field(min_length=2)
    pathEnd: list[tuple[float, float]] = Field(min_length=2)
    tol: float = 1e-10


def _tree_json(tree) -> dict:
    doc = tree.to_json()
    doc["directions"] = {
        str(v): [[d.real, d.imag] for d in dirs]
        for v, dirs in tree.terminal_directions().items()
    }
    return doc


def create_app(cors_origins_regex: str | None = r"http://(localhost|127\.0\.0\.1)(:\d+)?") -> FastAPI:
    app = FastAPI(title="steinerlab", version="0.1.0")
    if cors_origins_regex:
        app.add_middleware(
            CORSMiddleware,
            allow_origin_regex=cors_origins_regex,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def bad_request(_: Request, exc: RequestValidationError):
        detail = [
            {"loc": list(e.get("loc", ())), "msg": str(e.get("msg", ""))}
            for e in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": detail})

    @app.exception_handler(DegenerateInput)
    async def degenerate(_: Request, exc: DegenerateInput):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(LimitExceeded)
    async def too_large(_: Request, exc: LimitExceeded):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/healthz")
    async def healthz():
        return PlainTextResponse("ok")

    @app.post("/solve")
    async def solve_endpoint(req: SolveRequest):
        cfg = make_configuration([complex(x, y) for x, y in req.points])
        if len(cfg) > type_cap():
            raise LimitExceeded(f"n={len(cfg)} exceeds cap {type_cap()}")
        t0 = time.perf_counter()
        res = solve(cfg, tie_tolerance=req.tol)
        log.info("solve n=%d took %.1f ms", len(cfg), 1e3 * (time.perf_counter() - t0))
        cands = res.candidates[: req.topK] if req.topK else res.candidates
        return {
            "n": len(cfg),
            "ambiguous": res.ambiguous,
            "tie_tolerance": res.tie_tolerance,
            "candidates": [_tree_json(c.tree) for c in cands],
            "minimal": [_tree_json(c.tree) for c in res.minimal],
            "runner_up_gap": res.runner_up_gap(),
        }

    @app.post("/wall")
    async def wall_endpoint(req: WallRequest):
        a = make_configuration([complex(x, y) for x, y in req.pathStart])
        b = make_configuration([complex(x, y) for x, y in req.pathEnd])
        for cfg in (a, b):
            if len(cfg) > type_cap():
                raise LimitExceeded(f"n={len(cfg)} exceeds cap {type_cap()}")
        try:
            hit = find_wall(a, b, wall_tolerance=req.tol)
        except NoWall:
            return {"noWall": True}
        except (BracketLost, DegeneratePath) as e:
            return {"noWall": True, "detail": str(e)}
        return hit.to_json()

    @app.get("/types/{n}")
    async def types_endpoint(n: int, full: bool = False):
        if n > type_cap():
            raise LimitExceeded(f"n={n} exceeds cap {type_cap()}")
        if n < 2 or (full and n < 3):
            raise DegenerateInput(f"no types for n={n}")
        types = enumerate_full_types(n) if full else enumerate_types(n)
        return [t.to_json() for t in types]

    return app


app = create_app()
