from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, product

from coordgames.core.exceptions import BudgetExceededError, GameInputError
from coordgames.core.game import Colouring, DeviationStep, Game, colour_scores, node_payoff
from coordgames.core.settings import resolve_budget
from coordgames.utils.logging import log_json


def best_responses(game: Game, s: Colouring, i: int) -> tuple[int, ...]:
    """All colours of ``i`` maximising its payoff against ``s``, ascending by colour id."""
    game.check_node(i)
    game.validate(s)
    scores = colour_scores(game, s.colours, i)
    best = max(scores.values())
    return tuple(c for c in game.colour_sets[i] if scores[c] == best)


def can_improve(game: Game, colours: tuple[int, ...] | list[int], i: int) -> bool:
    scores = colour_scores(game, colours, i)
    return max(scores.values()) > scores[colours[i]]


def is_nash(game: Game, s: Colouring) -> bool:
    game.validate(s)
    cs = s.colours
    return not any(can_improve(game, cs, i) for i in range(game.n))


def is_profitable_deviation(game: Game, before: Colouring, after: Colouring) -> tuple[bool, tuple[int, ...]]:
    game.validate(before)
    game.validate(after)
    step = DeviationStep.between(game, before, after)
    return step.profitable, step.coalition


# ---------------------------
# Exhaustive coalition search
# ---------------------------

def count_deviations(game: Game, s: Colouring, max_size: int) -> int:
    """
    Number of (coalition, target) pairs with ``1 <= |K| <= max_size``: the
    elementary symmetric sums of ``|A(i)| - 1`` up to degree ``max_size``.
    """
    e = [1] + [0] * max_size
    for cs in game.colour_sets:
        alt = len(cs) - 1
        if alt == 0:
            continue
        for d in range(max_size, 0, -1):
            e[d] += e[d - 1] * alt
    return sum(e[1:])


def _check_budget(required: int, budget: int | None, what: str) -> None:
    limit = resolve_budget(budget)
    if required > limit:
        log_json("oracle_budget_exceeded", what=what, required=required, budget=limit)
        raise BudgetExceededError(required, limit, what)


def _check_size(game: Game, k: int) -> None:
    if not 1 <= k <= game.n:
        raise GameInputError(f"coalition size bound {k} outside 1..{game.n}")


def profitable_deviations(
    game: Game,
    s: Colouring,
    max_size: int,
    *,
    min_size: int = 1,
    budget: int | None = None,
    assume_nash: bool = False,
) -> Iterator[DeviationStep]:
    """
    Yield every profitable deviation of a coalition of size ``min_size..max_size``
    from ``s``: by coalition size, then lexicographic coalition, then target
    colouring in colour-id order.
    """
    game.validate(s)
    _check_size(game, max_size)
    _check_budget(count_deviations(game, s, max_size), budget, "coalition deviations")

    base = s.colours
    base_pay = [node_payoff(game, base, i, base[i]) for i in range(game.n)]
    alternatives = [tuple(c for c in cs if c != base[i]) for i, cs in enumerate(game.colour_sets)]
    movable = [i for i in range(game.n) if alternatives[i]]
    work = list(base)

    for size in range(min_size, max_size + 1):
        for coalition in combinations(movable, size):
            if assume_nash and size > 1:
                members = set(coalition)
                # at a Nash equilibrium a member with no in-neighbour inside the
                # coalition cannot beat its current payoff
                if any(not any(src in members for src, _ in game.in_edges[i]) for i in coalition):
                    continue
            for target in product(*(alternatives[i] for i in coalition)):
                for i, c in zip(coalition, target, strict=True):
                    work[i] = c
                deltas = []
                for i, c in zip(coalition, target, strict=True):
                    d = node_payoff(game, work, i, c) - base_pay[i]
                    if d <= 0:
                        break
                    deltas.append(d)
                else:
                    yield DeviationStep(
                        coalition=coalition,
                        old=tuple(base[i] for i in coalition),
                        new=tuple(target),
                        deltas=tuple(deltas),
                    )
                for i in coalition:
                    work[i] = base[i]


def find_profitable_deviation(
    game: Game, s: Colouring, max_size: int, *, budget: int | None = None
) -> DeviationStep | None:
    return next(profitable_deviations(game, s, max_size, budget=budget), None)


def is_k_equilibrium(game: Game, s: Colouring, k: int, *, budget: int | None = None) -> bool:
    """No coalition of at most ``k`` nodes can profitably deviate from ``s``. Exponential."""
    _check_size(game, k)
    if not is_nash(game, s):
        return False
    if k == 1:
        return True
    found = profitable_deviations(game, s, k, min_size=2, budget=budget, assume_nash=True)
    return next(found, None) is None


def is_strong(game: Game, s: Colouring, *, budget: int | None = None) -> bool:
    return is_k_equilibrium(game, s, game.n, budget=budget)
