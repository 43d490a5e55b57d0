from __future__ import annotations

from collections.abc import Sequence

from coordgames.core.exceptions import StructureError
from coordgames.core.game import Colouring, DeviationStep, Game, colour_scores
from coordgames.dynamics.paths import CONVERGED, Path
from coordgames.solvers.cycle import CycleState
from coordgames.solvers.structure import decompose
from coordgames.utils.logging import log_json


def cycle_component(
    game: Game,
    members: Sequence[int],
    labels: Sequence[int],
    colours: Sequence[int],
) -> CycleState:
    """
    The simple-cycle component ``members`` (ascending) as a cycle state,
    walked from its lowest node. Edges from outside the component are folded
    into the bonuses using the current ``colours`` of the external
    in-neighbours.
    """
    label = labels[members[0]]
    order: list[int] = []
    sets: list[tuple[int, ...]] = []
    bonuses: list[dict[int, int]] = []
    start: list[int] = []
    v = members[0]
    for _ in members:
        cs = game.colour_sets[v]
        bonus = game.bonuses[v]
        folded = None
        for src, w in game.in_edges[v]:
            if labels[src] != label and colours[src] in cs:
                if folded is None:
                    folded = dict(bonus)
                folded[colours[src]] = folded.get(colours[src], 0) + w
        order.append(v)
        sets.append(cs)
        bonuses.append(bonus if folded is None else folded)
        start.append(colours[v])
        for j, _ in game.out_edges[v]:
            if labels[j] == label:
                v = j
                break
    return CycleState(order, sets, bonuses, start)


def _best_response_step(game: Game, colours: list[int], i: int) -> DeviationStep | None:
    scores = colour_scores(game, colours, i)
    best = max(scores.values())
    now = scores[colours[i]]
    if now == best:
        return None
    target = next(c for c in game.colour_sets[i] if scores[c] == best)
    return DeviationStep(coalition=(i,), old=(colours[i],), new=(target,), deltas=(best - now,))


def solve_scc(game: Game, start: Colouring | None = None) -> tuple[Colouring, Path]:
    """
    Strong equilibrium for graphs whose strongly connected components are
    singletons or simple cycles. Components are solved in topological-label
    order with everything upstream frozen; the per-component paths are
    concatenated into one improvement path of the whole game. A cycle
    component follows the three phases plus at most one coalition step, so
    on a single cycle the result can differ from ``solve_cycle_strong``.
    """
    if not game.is_unit_weight():
        raise StructureError(
            "component solver needs unit edge weights; simple cycles with weighted "
            "edges may have no Nash equilibrium"
        )
    dec = decompose(game)
    bad = [k for k, kind in enumerate(dec.kinds) if kind == "other"]
    if bad:
        nodes = [game.external(i) for i in dec.components[bad[0]]]
        raise StructureError(f"strongly connected component {nodes} is not a simple cycle")

    s0 = game.default_colouring() if start is None else game.validate(start)
    colours = list(s0.colours)
    steps: list[DeviationStep] = []

    for members, kind in zip(dec.components, dec.kinds, strict=True):
        if kind == "singleton":
            step = _best_response_step(game, colours, members[0])
            if step is not None:
                steps.append(step)
                colours[members[0]] = step.new[0]
            continue
        state = cycle_component(game, members, dec.labels, colours)
        state.run_strong()
        steps.extend(state.steps)
        state.write_back(colours)

    end = Colouring(tuple(colours))
    log_json("solver_done", method="scc", n=game.n, components=dec.m, steps=len(steps))
    return end, Path(start=s0, end=end, steps=steps, status=CONVERGED)
