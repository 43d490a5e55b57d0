from __future__ import annotations

from dataclasses import dataclass

from coordgames.core.equilibria import find_profitable_deviation, is_k_equilibrium, is_nash
from coordgames.core.game import Colouring, DeviationStep, Game
from coordgames.oracle.enumerate import enumerate_colourings, iter_equilibria, parse_kind


@dataclass(frozen=True)
class CheckOutcome:
    level: str
    k: int
    holds: bool
    witness: DeviationStep | None


def check_level(game: Game, s: Colouring, level: str, *, budget: int | None = None) -> CheckOutcome:
    """
    Decide ``level`` (``nash``, ``strong`` or ``k=<int>``) at ``s``; on failure
    also return the first profitable deviation of an admitted coalition.
    """
    kind, k = parse_kind(level)
    size = 1 if kind == "nash" else game.n if kind == "strong" else min(k or 1, game.n)
    if size == 1:
        holds = is_nash(game, s)
    else:
        holds = is_k_equilibrium(game, s, size, budget=budget)
    witness = None if holds else find_profitable_deviation(game, s, size, budget=budget)
    return CheckOutcome(level=level, k=size, holds=holds, witness=witness)


def list_colourings(game: Game, kind: str, *, budget: int | None = None) -> list[Colouring]:
    """``all`` lists every colouring, anything else is an equilibrium kind."""
    if kind == "all":
        return list(enumerate_colourings(game, budget=budget))
    parsed, k = parse_kind(kind)
    return list(iter_equilibria(game, parsed, k, budget=budget))
