from __future__ import annotations

import math
from collections.abc import Iterator
from itertools import product
from typing import Literal

from coordgames.core.equilibria import can_improve, is_k_equilibrium, is_strong
from coordgames.core.exceptions import BudgetExceededError, GameInputError
from coordgames.core.game import Colouring, Game
from coordgames.core.settings import resolve_budget
from coordgames.utils.logging import log_json

Kind = Literal["nash", "strong", "k"]


def count_colourings(game: Game) -> int:
    return math.prod(len(cs) for cs in game.colour_sets)


def enumerate_colourings(game: Game, *, budget: int | None = None) -> Iterator[Colouring]:
    """Every colouring, lexicographic in (node id, colour id)."""
    total = count_colourings(game)
    limit = resolve_budget(budget)
    if total > limit:
        log_json("oracle_budget_exceeded", what="colourings", required=total, budget=limit)
        raise BudgetExceededError(total, limit, "colourings")
    for colours in product(*game.colour_sets):
        yield Colouring(colours)


def parse_kind(text: str) -> tuple[Kind, int | None]:
    """``nash``, ``strong`` or ``k=<int>``."""
    if text in ("nash", "strong"):
        return text, None  # type: ignore[return-value]
    if text.startswith("k="):
        try:
            k = int(text[2:])
        except ValueError:
            raise GameInputError(f"bad equilibrium kind {text!r}") from None
        if k < 1:
            raise GameInputError(f"bad equilibrium kind {text!r}")
        return "k", k
    raise GameInputError(f"unknown equilibrium kind {text!r} (nash, strong or k=<int>)")


def _matches(game: Game, s: Colouring, kind: Kind, k: int | None, budget: int | None) -> bool:
    cs = s.colours
    if any(can_improve(game, cs, i) for i in range(game.n)):
        return False
    if kind == "nash":
        return True
    if kind == "strong":
        return is_strong(game, s, budget=budget)
    if k is None:
        raise GameInputError("kind 'k' needs a coalition size")
    return is_k_equilibrium(game, s, min(k, game.n), budget=budget)


def iter_equilibria(
    game: Game, kind: Kind = "nash", k: int | None = None, *, budget: int | None = None
) -> Iterator[Colouring]:
    for s in enumerate_colourings(game, budget=budget):
        if _matches(game, s, kind, k, budget):
            yield s


def find_all(
    game: Game, kind: Kind = "nash", k: int | None = None, *, budget: int | None = None
) -> list[Colouring]:
    return list(iter_equilibria(game, kind, k, budget=budget))


def find_first(
    game: Game, kind: Kind = "nash", k: int | None = None, *, budget: int | None = None
) -> Colouring | None:
    return next(iter_equilibria(game, kind, k, budget=budget), None)


def exists(game: Game, kind: Kind = "nash", k: int | None = None, *, budget: int | None = None) -> bool:
    return find_first(game, kind, k, budget=budget) is not None
