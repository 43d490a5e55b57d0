from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from coordgames.core.exceptions import GameInputError, StructureError
from coordgames.core.game import Game


@dataclass(frozen=True)
class PolymatrixGame:
    """
    Sparse 0/1 polymatrix game: ``entries[(i, j)]`` is the set of strategies
    ``x`` with ``a_ij(x, x) = 1``; every other entry is 0. The payoff of ``i``
    is the sum over ``j`` of ``a_ij(s_i, s_j)``.
    """

    strategies: tuple[tuple[int, ...], ...]
    entries: Mapping[tuple[int, int], frozenset[int]]

    @property
    def n(self) -> int:
        return len(self.strategies)

    @cached_property
    def _by_player(self) -> tuple[tuple[tuple[int, frozenset[int]], ...], ...]:
        rows: list[list[tuple[int, frozenset[int]]]] = [[] for _ in range(self.n)]
        for (i, j), ones in sorted(self.entries.items()):
            rows[i].append((j, ones))
        return tuple(tuple(r) for r in rows)

    def entry(self, i: int, j: int, si: int, sj: int) -> int:
        ones = self.entries.get((i, j))
        return 1 if ones is not None and si == sj and si in ones else 0

    def _payoff_with(self, joint: Sequence[int], i: int, si: int) -> int:
        return sum(1 for j, ones in self._by_player[i] if si == joint[j] and si in ones)

    def payoff(self, joint: Sequence[int], i: int) -> int:
        return self._payoff_with(joint, i, joint[i])

    def payoffs(self, joint: Sequence[int]) -> tuple[int, ...]:
        if len(joint) != self.n:
            raise GameInputError(f"joint strategy has {len(joint)} entries, game has {self.n} players")
        return tuple(self.payoff(joint, i) for i in range(self.n))

    def is_nash(self, joint: Sequence[int]) -> bool:
        for i in range(self.n):
            now = self.payoff(joint, i)
            if any(self._payoff_with(joint, i, x) > now for x in self.strategies[i]):
                return False
        return True

    def joint_strategies(self) -> Iterator[tuple[int, ...]]:
        return product(*self.strategies)

    def find_all_nash(self) -> list[tuple[int, ...]]:
        return [joint for joint in self.joint_strategies() if self.is_nash(joint)]


def to_polymatrix(game: Game) -> PolymatrixGame:
    """
    Polymatrix form of an unweighted game without bonuses: ``a_ij(x, x) = 1``
    when ``j`` is an in-neighbour of ``i`` and both offer ``x``.
    """
    if not game.is_unit_weight():
        raise StructureError("polymatrix translation needs unit edge weights")
    if game.has_bonuses():
        raise StructureError("polymatrix translation needs zero bonuses")
    entries: dict[tuple[int, int], frozenset[int]] = {}
    for src, dst, _w in game.edges():
        shared = game.colour_lookup[src] & game.colour_lookup[dst]
        if shared:
            entries[(dst, src)] = frozenset(shared)
    return PolymatrixGame(strategies=game.colour_sets, entries=entries)
