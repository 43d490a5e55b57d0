from __future__ import annotations

from coordgames.core.exceptions import StructureError
from coordgames.core.game import Colouring, DeviationStep, Game, node_payoff
from coordgames.dynamics.paths import CONVERGED, Path
from coordgames.utils.logging import log_json


def switch_coalition(game: Game, colours: list[int], x: int) -> DeviationStep | None:
    """
    Largest coalition that profits from all switching to ``x``, or None.

    Start from every node that offers ``x`` but does not play it and drop the
    nodes that do not strictly improve when the whole remaining set switches,
    until nothing more is dropped. A node's payoff only grows when others
    join its colour, so a profitable coalition is never dropped.
    """
    candidates = [i for i in range(game.n) if colours[i] != x and x in game.colour_lookup[i]]
    base = {i: node_payoff(game, colours, i, colours[i]) for i in candidates}
    work = list(colours)
    while candidates:
        for i in candidates:
            work[i] = x
        gains = {i: node_payoff(game, work, i, x) - base[i] for i in candidates}
        keep = [i for i in candidates if gains[i] > 0]
        if len(keep) == len(candidates):
            return DeviationStep(
                coalition=tuple(keep),
                old=tuple(colours[i] for i in keep),
                new=(x,) * len(keep),
                deltas=tuple(gains[i] for i in keep),
            )
        for i in candidates:
            work[i] = colours[i]
        candidates = keep
    return None


def solve_two_colour(game: Game, start: Colouring | None = None) -> tuple[Colouring, Path]:
    """
    Strong equilibrium when at most two colours are in use. The lower colour
    id plays blue: coalitions switch to blue until none profits, then to red
    until none profits.
    """
    used = game.used_colours
    if len(used) > 2:
        tokens = [game.token(c) for c in used]
        raise StructureError(f"two-colour solver got {len(used)} colours in use: {tokens}")

    s0 = game.default_colouring() if start is None else game.validate(start)
    colours = list(s0.colours)
    steps: list[DeviationStep] = []
    for x in used:
        while (step := switch_coalition(game, colours, x)) is not None:
            for i in step.coalition:
                colours[i] = x
            steps.append(step)

    end = Colouring(tuple(colours))
    log_json("solver_done", method="two-colour", n=game.n, steps=len(steps))
    return end, Path(start=s0, end=end, steps=steps, status=CONVERGED)
