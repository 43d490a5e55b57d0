from __future__ import annotations

import random
from collections.abc import Sequence

import pytest

from coordgames.core import settings as settings_mod
from coordgames.core.game import Game, GameBuilder
from coordgames.oracle.fixtures import NO_NASH_TEXT, SWAP_CYCLE_TEXT, no_nash_game, swap_cycle_game

PALETTE = ("a", "b", "c", "d", "e", "f", "g", "h")


class RandomGames:
    """Seeded random instances of each structural class, external ids 1..n."""

    def __init__(self, rng: random.Random) -> None:
        self.rng = rng

    def _builder(self, n: int, k: int, bonus_max: int, palette: Sequence[str] | None = None) -> GameBuilder:
        colours = tuple(palette or PALETTE[:k])
        builder = GameBuilder(colours)
        for ext in range(1, n + 1):
            size = self.rng.randint(1, len(colours))
            tokens = sorted(self.rng.sample(colours, size), key=colours.index)
            builder.set_colours(ext, tokens)
            for tok in tokens:
                value = self.rng.randint(0, bonus_max)
                if value:
                    builder.set_bonus(ext, tok, value)
        return builder

    def _weight(self, weighted: bool) -> int:
        return self.rng.randint(1, 3) if weighted else 1

    def dag(self, n: int, k: int = 3, bonus_max: int = 2, *, p: float = 0.35, weighted: bool = False) -> Game:
        builder = self._builder(n, k, bonus_max)
        order = list(range(1, n + 1))
        self.rng.shuffle(order)
        for a in range(n):
            for b in range(a + 1, n):
                if self.rng.random() < p:
                    builder.add_edge(order[a], order[b], self._weight(weighted))
        return builder.build()

    def cycle(self, n: int, k: int = 3, bonus_max: int = 2) -> Game:
        builder = self._builder(n, k, bonus_max)
        order = list(range(1, n + 1))
        self.rng.shuffle(order)
        for a in range(n):
            builder.add_edge(order[a], order[(a + 1) % n])
        return builder.build()

    def cycle_scc(self, n: int, k: int = 3, bonus_max: int = 2, *, p: float = 0.2) -> Game:
        """Blocks that are singletons or simple cycles, joined by forward edges only."""
        builder = self._builder(n, k, bonus_max)
        nodes = list(range(1, n + 1))
        self.rng.shuffle(nodes)
        blocks: list[list[int]] = []
        while nodes:
            size = min(len(nodes), self.rng.choice((1, 2, 3, 4)))
            blocks.append(nodes[:size])
            nodes = nodes[size:]
        for block in blocks:
            if len(block) >= 2:
                for a in range(len(block)):
                    builder.add_edge(block[a], block[(a + 1) % len(block)])
        for x in range(len(blocks)):
            for y in range(x + 1, len(blocks)):
                for src in blocks[x]:
                    for dst in blocks[y]:
                        if self.rng.random() < p:
                            builder.add_edge(src, dst)
        return builder.build()

    def two_colour(self, n: int, bonus_max: int = 2, *, p: float = 0.35, weighted: bool = True) -> Game:
        builder = self._builder(n, 2, bonus_max)
        for src in range(1, n + 1):
            for dst in range(1, n + 1):
                if src != dst and self.rng.random() < p:
                    builder.add_edge(src, dst, self._weight(weighted))
        return builder.build()

    def general(self, n: int, k: int = 3, bonus_max: int = 2, *, p: float = 0.3, weighted: bool = False) -> Game:
        builder = self._builder(n, k, bonus_max)
        for src in range(1, n + 1):
            for dst in range(1, n + 1):
                if src != dst and self.rng.random() < p:
                    builder.add_edge(src, dst, self._weight(weighted))
        return builder.build()

    def complete(self, n: int, k: int = 3, bonus_max: int = 2) -> Game:
        builder = self._builder(n, k, bonus_max)
        for src in range(1, n + 1):
            for dst in range(1, n + 1):
                if src != dst:
                    builder.add_edge(src, dst)
        return builder.build()

    def clique_blocks(self, n: int, bonus_max: int = 2, *, p: float = 0.3) -> Game:
        """
        Disjoint bidirectional cliques, each with its own slice of the palette,
        plus random one-way edges between cliques. Colour complete by
        construction: nodes offering a colour all sit in one clique.
        """
        nodes = list(range(1, n + 1))
        self.rng.shuffle(nodes)
        blocks: list[list[int]] = []
        while nodes:
            size = min(len(nodes), self.rng.randint(1, 3))
            blocks.append(nodes[:size])
            nodes = nodes[size:]
        width = len(PALETTE) // len(blocks)
        builder = GameBuilder(PALETTE[: width * len(blocks)])
        for k, block in enumerate(blocks):
            palette = PALETTE[k * width : (k + 1) * width]
            for ext in block:
                tokens = sorted(self.rng.sample(palette, self.rng.randint(1, width)), key=palette.index)
                builder.set_colours(ext, tokens)
                for tok in tokens:
                    value = self.rng.randint(0, bonus_max)
                    if value:
                        builder.set_bonus(ext, tok, value)
            for src in block:
                for dst in block:
                    if src != dst:
                        builder.add_edge(src, dst)
        for x, first in enumerate(blocks):
            for second in blocks[x + 1 :]:
                for src in first:
                    for dst in second:
                        if self.rng.random() < p:
                            a, b = (src, dst) if self.rng.random() < 0.5 else (dst, src)
                            builder.add_edge(a, b)
        return builder.build()

    def colouring(self, game: Game):
        return game.colouring_of([game.token(self.rng.choice(cs)) for cs in game.colour_sets])


def make_game(
    sets: dict[int, Sequence[str]],
    edges: Sequence[tuple[int, int] | tuple[int, int, int]] = (),
    bonuses: dict[tuple[int, str], int] | None = None,
    colours: Sequence[str] = (),
) -> Game:
    builder = GameBuilder(colours)
    for ext, tokens in sets.items():
        builder.set_colours(ext, tokens)
    for (ext, tok), value in (bonuses or {}).items():
        builder.set_bonus(ext, tok, value)
    for edge in edges:
        builder.add_edge(*edge)
    return builder.build()


@pytest.fixture
def games() -> RandomGames:
    return RandomGames(random.Random(20240613))


@pytest.fixture
def no_nash():
    return no_nash_game()


@pytest.fixture
def swap_cycle():
    return swap_cycle_game()


@pytest.fixture
def no_nash_path(tmp_path):
    path = tmp_path / "no_nash.game"
    path.write_text(NO_NASH_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def swap_cycle_path(tmp_path):
    path = tmp_path / "swap_cycle.game"
    path.write_text(SWAP_CYCLE_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def small_budget(monkeypatch):
    """Shrink the default state budget so tests can hit it cheaply."""
    settings_mod.get_settings.cache_clear()
    monkeypatch.setenv("COORDGAMES_STATE_BUDGET", "10")
    yield 10
    settings_mod.get_settings.cache_clear()


@pytest.fixture
def make():
    return make_game
