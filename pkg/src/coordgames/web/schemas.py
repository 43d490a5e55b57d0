from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

Method = Literal["auto", "dag", "cycle", "scc", "two-colour", "brute"]


class GameRequest(BaseModel):
    game: str = Field(description="game file text")


class ColouringRequest(GameRequest):
    colouring: str = Field(description="colouring file text, '<node-id> <colour>' per line")


class CheckRequest(ColouringRequest):
    level: str = Field(default="nash", description="nash, strong or k=<int>")


class SolveRequest(GameRequest):
    method: Method = "auto"
    start: str | None = Field(default=None, description="optional start colouring text")


class EnumerateRequest(GameRequest):
    kind: str = Field(default="nash", description="nash, strong, k=<int> or all")


class ClassifyResponse(BaseModel):
    n: int
    edges: int
    colours_used: int
    unit_weights: bool
    is_dag: bool
    is_single_simple_cycle: bool
    all_sccs_simple_cycles: bool
    uses_at_most_two_colours: bool
    is_colour_complete: bool


class PayoffResponse(BaseModel):
    payoffs: dict[int, int]
    social_welfare: int


class DeviationOut(BaseModel):
    coalition: list[int]
    old: list[str]
    new: list[str]
    deltas: list[int]


class CheckResponse(BaseModel):
    level: str
    holds: bool
    witness: DeviationOut | None = None


class SolveResponse(BaseModel):
    method: Method
    found: bool
    colouring: dict[int, str] | None = None
    steps: int | None = None


class EnumerateResponse(BaseModel):
    kind: str
    count: int
    colourings: list[dict[int, str]]
