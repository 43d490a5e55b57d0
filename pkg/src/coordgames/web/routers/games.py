from __future__ import annotations

from dataclasses import asdict

from fastapi import APIRouter, Depends

from coordgames.core.game import DeviationStep, Game, payoffs
from coordgames.core.settings import Settings
from coordgames.formats.game_file import parse_colouring, parse_game
from coordgames.services.checks import check_level, list_colourings
from coordgames.solvers.dispatch import solve
from coordgames.solvers.structure import classify
from coordgames.utils.logging import log_json
from coordgames.web.deps import get_settings
from coordgames.web.schemas import (
    CheckRequest,
    CheckResponse,
    ClassifyResponse,
    ColouringRequest,
    DeviationOut,
    EnumerateRequest,
    EnumerateResponse,
    GameRequest,
    PayoffResponse,
    SolveRequest,
    SolveResponse,
)

router = APIRouter(prefix="/games", tags=["games"])


def _deviation_out(game: Game, step: DeviationStep) -> DeviationOut:
    return DeviationOut(
        coalition=[game.external(i) for i in step.coalition],
        old=[game.token(c) for c in step.old],
        new=[game.token(c) for c in step.new],
        deltas=list(step.deltas),
    )


@router.post("/classify", response_model=ClassifyResponse)
def classify_game(body: GameRequest) -> ClassifyResponse:
    game = parse_game(body.game)
    return ClassifyResponse(**asdict(classify(game)))


@router.post("/payoff", response_model=PayoffResponse)
def payoff_report(body: ColouringRequest) -> PayoffResponse:
    game = parse_game(body.game)
    s = parse_colouring(game, body.colouring)
    pay = payoffs(game, s)
    return PayoffResponse(
        payoffs={game.external(i): p for i, p in enumerate(pay)},
        social_welfare=sum(pay),
    )


@router.post("/check", response_model=CheckResponse)
def check_colouring(body: CheckRequest, settings: Settings = Depends(get_settings)) -> CheckResponse:
    game = parse_game(body.game)
    s = parse_colouring(game, body.colouring)
    outcome = check_level(game, s, body.level, budget=settings.state_budget)
    witness = _deviation_out(game, outcome.witness) if outcome.witness is not None else None
    return CheckResponse(level=outcome.level, holds=outcome.holds, witness=witness)


@router.post("/solve", response_model=SolveResponse)
def solve_game(body: SolveRequest, settings: Settings = Depends(get_settings)) -> SolveResponse:
    game = parse_game(body.game)
    start = parse_colouring(game, body.start) if body.start else None
    result = solve(game, body.method, start=start, budget=settings.state_budget)
    log_json("solve_request", method=result.method, n=game.n, found=result.found)
    return SolveResponse(
        method=result.method,
        found=result.found,
        colouring=game.describe(result.colouring) if result.colouring is not None else None,
        steps=len(result.path) if result.path is not None else None,
    )


@router.post("/enumerate", response_model=EnumerateResponse)
def enumerate_colourings(
    body: EnumerateRequest, settings: Settings = Depends(get_settings)
) -> EnumerateResponse:
    game = parse_game(body.game)
    found = list_colourings(game, body.kind, budget=settings.state_budget)
    return EnumerateResponse(
        kind=body.kind,
        count=len(found),
        colourings=[game.describe(s) for s in found],
    )
