from __future__ import annotations

from coordgames.core.exceptions import StructureError
from coordgames.core.game import Colouring, Game, colour_scores
from coordgames.dynamics.potential import topological_order
from coordgames.utils.logging import log_json


def solve_dag(game: Game) -> Colouring:
    """
    Best responses in topological order. Successors never affect a node's
    payoff, so the result is a Nash equilibrium, and on a DAG every Nash
    equilibrium is strong.
    """
    topo = topological_order(game)
    if topo.order is None:
        cycle = [game.external(i) for i in topo.cycle or ()]
        raise StructureError(f"graph is not a DAG (cycle through nodes {cycle})")

    colours = [cs[0] for cs in game.colour_sets]
    for i in topo.order:
        scores = colour_scores(game, colours, i)
        best = max(scores.values())
        colours[i] = next(c for c in game.colour_sets[i] if scores[c] == best)

    log_json("solver_done", method="dag", n=game.n)
    return Colouring(tuple(colours))
