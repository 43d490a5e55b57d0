"""
Reference games with known equilibrium behaviour, used by tests and as
worked examples.
"""

from __future__ import annotations

from coordgames.core.game import Colouring, Game, GameBuilder
from coordgames.formats.game_file import parse_colouring, parse_game

# Nine nodes; the strongly connected part {1..6} is fed by sources 7, 8, 9.
# Has no Nash equilibrium.
NO_NASH_TEXT = """\
colours a b c
node 1
node 2
node 3
node 4
node 5
node 6
node 7
node 8
node 9
set 1 a b
set 2 a c
set 3 b c
set 4 a b
set 5 a c
set 6 b c
set 7 a
set 8 c
set 9 b
edge 1 2
edge 1 4
edge 2 3
edge 2 5
edge 3 1
edge 3 6
edge 4 2
edge 5 3
edge 6 1
edge 7 1
edge 8 2
edge 9 3
"""

NO_NASH_COLOURING_TEXT = """\
1 b
2 c
3 c
4 b
5 c
6 c
7 a
8 c
9 b
"""

# Two-cycle where (a, b) is a Nash equilibrium but not strong; (c, c) is strong.
SWAP_CYCLE_TEXT = """\
colours a b c
node 1
node 2
set 1 a c
set 2 b c
edge 1 2
edge 2 1
"""


def no_nash_game() -> Game:
    return parse_game(NO_NASH_TEXT)


def no_nash_colouring(game: Game) -> Colouring:
    return parse_colouring(game, NO_NASH_COLOURING_TEXT)


def swap_cycle_game() -> Game:
    return parse_game(SWAP_CYCLE_TEXT)


def rotation_cycle_game(n: int = 3) -> Game:
    """Simple cycle ``1 -> 2 -> ... -> n -> 1``, every node with colours {a, b}."""
    builder = GameBuilder(("a", "b"))
    for k in range(1, n + 1):
        builder.set_colours(k, ("a", "b"))
    for k in range(1, n + 1):
        builder.add_edge(k, k % n + 1)
    return builder.build()


def rotation_start(game: Game) -> Colouring:
    """``(a, b, ..., b)``."""
    return game.colouring_of(["a"] + ["b"] * (game.n - 1))


def rotation_script(game: Game) -> tuple[int, ...]:
    """
    Internal node ids of the rotating improvement path from
    ``rotation_start``: node 2 copies node 1, node 1 copies node n, and so on
    around the cycle. It is back at the start after ``2n`` steps.
    """
    n = game.n
    script: list[int] = []
    for k in range(1, n + 1):
        script.extend((game.node(k % n + 1), game.node(k)))
    return tuple(script)


def weighted_rotation_game() -> Game:
    """
    Three-cycle with weight-2 edges and a +1 bonus per node. Best responses
    chase each other around the cycle, so there is no Nash equilibrium.
    """
    builder = GameBuilder(("a", "b", "c"))
    for ext, tokens, bonus in ((1, ("a", "b"), "a"), (2, ("a", "c"), "c"), (3, ("b", "c"), "b")):
        builder.set_colours(ext, tokens)
        builder.set_bonus(ext, bonus, 1)
    builder.add_edge(1, 2, 2)
    builder.add_edge(2, 3, 2)
    builder.add_edge(3, 1, 2)
    return builder.build()
