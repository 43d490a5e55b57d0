from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Literal

from coordgames.core.equilibria import find_profitable_deviation, profitable_deviations
from coordgames.core.exceptions import GameInputError
from coordgames.core.game import Colouring, DeviationStep, Game, colour_scores, payoffs
from coordgames.utils.logging import log_json

PathStatus = Literal["converged-equilibrium", "revisited-state", "step-budget-exhausted"]
Mode = Literal["unilateral", "coalition"]
Policy = Literal["first", "random", "scripted"]

CONVERGED: PathStatus = "converged-equilibrium"
REVISITED: PathStatus = "revisited-state"
EXHAUSTED: PathStatus = "step-budget-exhausted"


@dataclass(frozen=True)
class Scheduler:
    """
    Which profitable deviation a path takes next.

    ``first`` takes the first deviation in tie-break order (unilateral: the
    lowest node that can improve moves to its lowest-id best response;
    coalition: smallest coalition, then lexicographic coalition, then target
    colouring in colour-id order). ``random`` draws uniformly from all admitted
    deviations with ``random.Random(seed)``. ``scripted`` (unilateral only)
    cycles through ``script`` (internal node ids); a scripted node moves to its
    best response, nodes with no profitable move are skipped, and a full pass
    without a move falls back to ``first``.
    """

    mode: Mode = "unilateral"
    policy: Policy = "first"
    seed: int | None = None
    max_coalition: int = 1
    script: tuple[int, ...] = ()
    budget: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("unilateral", "coalition"):
            raise GameInputError(f"unknown mode {self.mode!r}")
        if self.policy not in ("first", "random", "scripted"):
            raise GameInputError(f"unknown policy {self.policy!r}")
        if self.max_coalition < 1:
            raise GameInputError("max coalition size must be at least 1")
        if self.policy == "scripted" and (self.mode != "unilateral" or not self.script):
            raise GameInputError("scripted policy needs unilateral mode and a non-empty script")


@dataclass
class Path:
    """A chain of profitable deviations from ``start`` ending in ``end``."""

    start: Colouring
    end: Colouring
    steps: list[DeviationStep] = field(default_factory=list)
    status: PathStatus = CONVERGED

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def last(self) -> Colouring:
        return self.end

    def colourings(self) -> Iterator[Colouring]:
        s = self.start
        yield s
        for step in self.steps:
            s = step.apply(s)
            yield s

    def transitions(self) -> Iterator[tuple[Colouring, DeviationStep, Colouring]]:
        before = self.start
        for step in self.steps:
            after = step.apply(before)
            yield before, step, after
            before = after


# ---------------------------
# Step selection
# ---------------------------

def _unilateral_move(game: Game, current: list[int], i: int) -> DeviationStep | None:
    scores = colour_scores(game, current, i)
    best = max(scores.values())
    now = scores[current[i]]
    if best <= now:
        return None
    target = next(c for c in game.colour_sets[i] if scores[c] == best)
    return DeviationStep(coalition=(i,), old=(current[i],), new=(target,), deltas=(best - now,))


def _unilateral_options(game: Game, current: list[int]) -> list[DeviationStep]:
    out: list[DeviationStep] = []
    for i in range(game.n):
        scores = colour_scores(game, current, i)
        now = scores[current[i]]
        for c in game.colour_sets[i]:
            if scores[c] > now:
                out.append(DeviationStep(coalition=(i,), old=(current[i],), new=(c,), deltas=(scores[c] - now,)))
    return out


class _Selector:
    def __init__(self, game: Game, sched: Scheduler) -> None:
        self.game = game
        self.sched = sched
        self.rng = random.Random(sched.seed)
        self.cursor = 0
        for i in sched.script:
            game.check_node(i)

    def next_step(self, current: list[int]) -> DeviationStep | None:
        game, sched = self.game, self.sched
        if sched.mode == "coalition":
            s = Colouring(tuple(current))
            size = min(sched.max_coalition, game.n)
            if sched.policy == "random":
                options = list(profitable_deviations(game, s, size, budget=sched.budget))
                return self.rng.choice(options) if options else None
            return find_profitable_deviation(game, s, size, budget=sched.budget)

        if sched.policy == "random":
            options = _unilateral_options(game, current)
            return self.rng.choice(options) if options else None
        if sched.policy == "scripted":
            script = sched.script
            for _ in range(len(script)):
                i = script[self.cursor % len(script)]
                self.cursor += 1
                step = _unilateral_move(game, current, i)
                if step is not None:
                    return step
        for i in range(game.n):
            step = _unilateral_move(game, current, i)
            if step is not None:
                return step
        return None


def run_path(game: Game, start: Colouring, sched: Scheduler, max_steps: int) -> Path:
    """
    Follow profitable deviations chosen by ``sched`` from ``start`` until no
    admitted deviation exists, a colouring repeats, or ``max_steps`` steps.
    """
    if max_steps < 1:
        raise GameInputError("max_steps must be at least 1")
    game.validate(start)
    selector = _Selector(game, sched)

    current = list(start.colours)
    seen = {start.key()}
    steps: list[DeviationStep] = []
    while True:
        step = selector.next_step(current)
        if step is None:
            status = CONVERGED
            break
        if len(steps) >= max_steps:
            status = EXHAUSTED
            break
        for i, c in zip(step.coalition, step.new, strict=True):
            current[i] = c
        steps.append(step)
        key = tuple(current)
        if key in seen:
            status = REVISITED
            break
        seen.add(key)

    log_json("path_done", mode=sched.mode, policy=sched.policy, status=status, steps=len(steps))
    return Path(start=start, end=Colouring(tuple(current)), steps=steps, status=status)


# ---------------------------
# Trace output
# ---------------------------

def format_step(game: Game, step: DeviationStep) -> str:
    members = ",".join(str(game.external(i)) for i in step.coalition)
    changes = " ".join(
        f"{game.external(i)}:{game.token(a)}->{game.token(b)}"
        for i, a, b in zip(step.coalition, step.old, step.new, strict=True)
    )
    deltas = ",".join(f"+{d}" if d > 0 else str(d) for d in step.deltas)
    return f"coalition={{{members}}} {changes} deltas=[{deltas}]"


def trace_lines(game: Game, path: Path) -> Iterator[str]:
    """One line per step: index, coalition, colour changes, deltas, social welfare before/after."""
    sw_before = sum(payoffs(game, path.start))
    for t, (_before, step, after) in enumerate(path.transitions(), start=1):
        sw_after = sum(payoffs(game, after))
        yield f"step {t} {format_step(game, step)} sw {sw_before}->{sw_after}"
        sw_before = sw_after
