from __future__ import annotations

from coordgames.core.game import Colouring, Game, colour_scores
from coordgames.oracle.enumerate import enumerate_colourings, exists
from coordgames.reductions.gadget import CORE, build_gadget

SECURE_PAYOFF = 2


def can_secure(game: Game, s: Colouring, i: int, level: int) -> bool:
    """Some colour of ``i`` pays at least ``level`` against ``s``."""
    return max(colour_scores(game, s.colours, i).values()) >= level


def core_security(game: Game, core: list[int], *, budget: int | None = None) -> bool:
    """Every core node can reach ``SECURE_PAYOFF`` in every colouring."""
    return all(
        all(can_secure(game, s, i, SECURE_PAYOFF) for i in core)
        for s in enumerate_colourings(game, budget=budget)
    )


def verify_no_ne_gadget(x: bool, y: bool, z: bool) -> bool:
    """The standalone gadget has no Nash equilibrium and its core can always secure payoff 2."""
    game, ids = build_gadget(1, x, y, z)
    if exists(game, "nash"):
        return False
    return core_security(game, [game.node(ids[role]) for role in CORE])
