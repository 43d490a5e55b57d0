from __future__ import annotations

from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from coordgames.core.exceptions import BudgetExceededError, CoordGameError
from coordgames.core.settings import Settings
from coordgames.utils.logging import log_json, setup_logging
from coordgames.web.routers import games, health


@asynccontextmanager
async def lifespan(app: FastAPI):
    settings = Settings()
    setup_logging(settings.log_level.upper())
    app.state.settings = settings
    yield


async def _budget_error(request: Request, exc: Exception) -> JSONResponse:
    log_json("request_failed", path=request.url.path, error=str(exc), status=413)
    return JSONResponse(status_code=413, content={"detail": str(exc)})


async def _input_error(request: Request, exc: Exception) -> JSONResponse:
    log_json("request_failed", path=request.url.path, error=str(exc), status=422)
    return JSONResponse(status_code=422, content={"detail": str(exc)})


def create_app() -> FastAPI:
    app = FastAPI(
        title="Coordination Games API",
        version="0.1.0",
        docs_url="/docs",
        redoc_url="/redoc",
        openapi_url="/openapi.json",
        lifespan=lifespan,
    )
    app.add_exception_handler(BudgetExceededError, _budget_error)
    app.add_exception_handler(CoordGameError, _input_error)
    app.include_router(health.router)
    app.include_router(games.router)
    return app


app = create_app()
