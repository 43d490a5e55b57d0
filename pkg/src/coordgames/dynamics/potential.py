from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from coordgames.core.exceptions import GameInputError
from coordgames.core.game import Colouring, Game, node_payoff


@dataclass(frozen=True)
class TopologicalOrder:
    """Either a node order with every edge pointing forward, or a directed cycle."""

    order: tuple[int, ...] | None
    cycle: tuple[int, ...] | None

    @property
    def is_dag(self) -> bool:
        return self.order is not None


def topological_order(game: Game) -> TopologicalOrder:
    g = game.digraph
    try:
        # smallest available node first, so the order is deterministic
        return TopologicalOrder(order=tuple(nx.lexicographical_topological_sort(g)), cycle=None)
    except nx.NetworkXUnfeasible:
        edges = nx.find_cycle(g, source=list(g.nodes))
        return TopologicalOrder(order=None, cycle=tuple(u for u, _v in edges))


def check_rank_order(game: Game, order: Sequence[int]) -> list[int]:
    """Rank of every node under ``order``; every edge must go from lower to higher rank."""
    if sorted(order) != list(range(game.n)):
        raise GameInputError("order is not a permutation of the nodes")
    rank = [0] * game.n
    for pos, i in enumerate(order):
        rank[i] = pos
    for src, dst, _w in game.edges():
        if rank[src] > rank[dst]:
            raise GameInputError(
                f"order places node {game.external(dst)} before its in-neighbour {game.external(src)}"
            )
    return rank


def lex_potential(game: Game, order: Sequence[int], s: Colouring) -> tuple[int, ...]:
    """
    Payoffs listed in ``order``. On a DAG with ``order`` topological, every
    profitable coalition deviation strictly increases this vector
    lexicographically (plain tuple comparison).
    """
    check_rank_order(game, order)
    game.validate(s)
    cs = s.colours
    return tuple(node_payoff(game, cs, i, cs[i]) for i in order)
