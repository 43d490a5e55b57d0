from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from coordgames.core.exceptions import StructureError
from coordgames.core.game import Colouring, DeviationStep, Game
from coordgames.dynamics.paths import CONVERGED, Path
from coordgames.solvers.structure import cycle_order
from coordgames.utils.logging import log_json

# Phase tag of the single coalition step appended by ``strong_cycle_path``.
COALITION_PHASE = 4


@dataclass
class CyclePath(Path):
    """A cycle solver path; ``phases[k]`` is the phase (1..3, or 4) of ``steps[k]``."""

    phases: list[int] = field(default_factory=list)


class CycleState:
    """
    A unit-weight simple cycle laid out by position: position ``k`` is node
    ``order[k]`` and its only in-neighbour on the cycle sits at position
    ``k - 1``. ``bonuses[k]`` may already include matches against fixed
    nodes off the cycle. Colours are held per position, not per node.
    """

    def __init__(
        self,
        order: Sequence[int],
        colour_sets: Sequence[tuple[int, ...]],
        bonuses: Sequence[Mapping[int, int]],
        colours: list[int],
        *,
        record: bool = True,
    ) -> None:
        self.order = tuple(order)
        self.n = len(self.order)
        self.bonuses = bonuses
        self.colours = colours
        # max-bonus set (ascending colour id) and its bonus, per position
        self.ma: list[tuple[int, ...]] = []
        self.bmax: list[int] = []
        for cs, bonus in zip(colour_sets, bonuses, strict=True):
            top = max(bonus.values()) if bonus else 0
            self.ma.append(tuple([c for c in cs if bonus.get(c, 0) == top]) if top else cs)
            self.bmax.append(top)
        self.steps: list[DeviationStep] | None = [] if record else None
        self.phases: list[int] | None = [] if record else None

    @classmethod
    def for_game(cls, game: Game, order: Sequence[int], start: Colouring, *, record: bool = True) -> CycleState:
        return cls(
            order,
            [game.colour_sets[v] for v in order],
            [game.bonuses[v] for v in order],
            [start.colours[v] for v in order],
            record=record,
        )

    def payoff(self, k: int) -> int:
        c = self.colours[k]
        return self.bonuses[k].get(c, 0) + (1 if c == self.colours[k - 1] else 0)

    def gain(self, k: int) -> tuple[int, int] | None:
        """``(best response, payoff gain)`` of position ``k``, or None if it already best-responds."""
        p = self.colours[k - 1]
        ma = self.ma[k]
        if p in ma:
            target, best = p, self.bmax[k] + 1
        else:
            target, best = ma[0], self.bmax[k]
        now = self.payoff(k)
        if now == best:
            return None
        return target, best - now

    def move(self, k: int, new: int, delta: int, phase: int) -> None:
        old = self.colours[k]
        assert delta > 0 and new != old, "cycle update must be strictly profitable"
        self.colours[k] = new
        if self.steps is not None:
            self.steps.append(DeviationStep(coalition=(self.order[k],), old=(old,), new=(new,), deltas=(delta,)))
            self.phases.append(phase)

    def run_phases(self) -> None:
        """
        Phase 1 walks positions 0..n-2, Phase 2 continues from position n-1
        for at most n updates, Phase 3 for at most n more. Each phase stops as
        soon as the considered player already best-responds: every other
        player does too at that point.
        """
        n = self.n
        gain = self.gain
        move = self.move
        for k in range(n - 1):
            g = gain(k)
            if g is not None:
                move(k, g[0], g[1], 1)

        k = n - 1
        for _ in range(n):
            g = gain(k)
            if g is None:
                return
            move(k, g[0], g[1], 2)
            k = (k + 1) % n

        assert all(
            c in ma for c, ma in zip(self.colours, self.ma, strict=True)
        ), "phase 3 entered with a colour outside its max-bonus set"
        for _ in range(n):
            g = gain(k)
            if g is None:
                return
            assert g[0] == self.colours[k - 1], "phase 3 update must copy the predecessor"
            move(k, g[0], g[1], 3)
            k = (k + 1) % n
        if gain(k) is not None:
            raise AssertionError("phase 3 exceeded n updates")

    def common_max_colour(self) -> int | None:
        """Lowest colour in the intersection of all max-bonus sets, if any."""
        common = set(self.ma[0])
        for ma in self.ma:
            common.intersection_update(ma)
            if not common:
                return None
        return min(common)

    def run_strong(self) -> None:
        """
        The three phases, then, when their Nash equilibrium leaves every
        player below its maximum, one coalition step to the monochromatic
        colouring in the lowest common max-bonus colour.
        """
        self.run_phases()
        c = self.common_max_colour()
        if c is None:
            return
        if any(self.payoff(k) == self.bmax[k] + 1 for k in range(self.n)):
            return
        movers = sorted((v, k) for k, v in enumerate(self.order) if self.colours[k] != c)
        if self.steps is not None:
            self.steps.append(
                DeviationStep(
                    coalition=tuple(v for v, _ in movers),
                    old=tuple(self.colours[k] for _, k in movers),
                    new=(c,) * len(movers),
                    deltas=tuple(self.bmax[k] + 1 - self.payoff(k) for _, k in movers),
                )
            )
            self.phases.append(COALITION_PHASE)
        for _, k in movers:
            self.colours[k] = c

    def write_back(self, colours: list[int]) -> None:
        for v, c in zip(self.order, self.colours, strict=True):
            colours[v] = c


def _require_cycle(game: Game) -> tuple[int, ...]:
    order = cycle_order(game)
    if order is None:
        raise StructureError("graph is not a single simple cycle")
    if not game.is_unit_weight():
        raise StructureError(
            "cycle solvers need unit edge weights; the three-phase procedure "
            "does not converge on weighted cycles"
        )
    return order


def _start(game: Game, start: Colouring | None) -> Colouring:
    return game.default_colouring() if start is None else game.validate(start)


def _cycle_path(state: CycleState, start: Colouring) -> CyclePath:
    end = list(start.colours)
    state.write_back(end)
    return CyclePath(
        start=start,
        end=Colouring(tuple(end)),
        steps=state.steps,
        status=CONVERGED,
        phases=state.phases,
    )


def solve_cycle(game: Game, start: Colouring | None = None) -> tuple[Colouring, CyclePath]:
    """
    Three-phase best-response procedure on a simple cycle. Players are taken
    in cycle order from the lowest internal node; a player only moves when
    its colour is not a best response, and then to the lowest-id best
    response among its max-bonus colours. At most 3n updates.
    """
    order = _require_cycle(game)
    s0 = _start(game, start)
    state = CycleState.for_game(game, order, s0)
    state.run_phases()
    path = _cycle_path(state, s0)
    log_json("solver_done", method="cycle", n=game.n, steps=len(path.steps))
    return path.end, path


def strong_cycle_path(game: Game, start: Colouring | None = None) -> CyclePath:
    """Improvement path on a simple cycle ending in a strong equilibrium."""
    order = _require_cycle(game)
    s0 = _start(game, start)
    state = CycleState.for_game(game, order, s0)
    state.run_strong()
    return _cycle_path(state, s0)


def solve_cycle_strong(game: Game, start: Colouring | None = None) -> Colouring:
    """
    Strong equilibrium of a simple cycle in linear time: the monochromatic
    colouring in the lowest colour shared by every max-bonus set, or the
    three-phase Nash equilibrium when no such colour exists.
    """
    order = _require_cycle(game)
    s0 = _start(game, start)
    state = CycleState.for_game(game, order, s0, record=False)
    c = state.common_max_colour()
    if c is not None:
        log_json("solver_done", method="cycle", n=game.n, monochromatic=game.token(c))
        return Colouring((c,) * game.n)
    state.run_phases()
    end = list(s0.colours)
    state.write_back(end)
    log_json("solver_done", method="cycle", n=game.n, moved=sum(a != b for a, b in zip(end, s0.colours)))
    return Colouring(tuple(end))
