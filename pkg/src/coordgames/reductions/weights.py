from __future__ import annotations

from collections.abc import Mapping

from coordgames.core.game import Colouring, Game, GameBuilder
from coordgames.utils.logging import log_json


def expand_weights(game: Game) -> tuple[Game, dict[int, int]]:
    """
    Equivalent unit-weight game. A weight-``w`` edge ``i -> j`` with ``w >= 2``
    becomes ``w`` fresh replicas of ``i`` (colour set of ``i``, no bonus), each
    wired ``i -> i_t -> j``. Weight-0 edges are dropped. Replica ids follow the
    largest original id, allocated in edge order. The returned projection maps
    every external id of the expanded game to the original node it stands for.
    """
    builder = GameBuilder(game.colours)
    projection: dict[int, int] = {}
    for i, ext in enumerate(game.node_ids):
        builder.set_colours(ext, [game.token(c) for c in game.colour_sets[i]])
        for c, value in game.bonuses[i].items():
            builder.set_bonus(ext, game.token(c), value)
        projection[ext] = ext

    next_id = max(game.node_ids) + 1
    for src, dst, w in game.edges():
        s_ext, d_ext = game.external(src), game.external(dst)
        if w == 0:
            continue
        if w == 1:
            builder.add_edge(s_ext, d_ext)
            continue
        tokens = [game.token(c) for c in game.colour_sets[src]]
        for _ in range(w):
            builder.set_colours(next_id, tokens)
            builder.add_edge(s_ext, next_id)
            builder.add_edge(next_id, d_ext)
            projection[next_id] = s_ext
            next_id += 1

    expanded = builder.build()
    log_json("reduction_built", kind="expand_weights", nodes=expanded.n, edges=expanded.edge_count)
    return expanded, projection


def canonical_extension(
    original: Game, expanded: Game, projection: Mapping[int, int], s: Colouring
) -> Colouring:
    """Colouring of ``expanded`` where every replica copies the node it replicates."""
    original.validate(s)
    return Colouring(
        tuple(s[original.node(projection[ext])] for ext in expanded.node_ids)
    )
