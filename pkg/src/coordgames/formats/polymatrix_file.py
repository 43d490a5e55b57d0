from __future__ import annotations

from coordgames.core.game import Game
from coordgames.reductions.polymatrix import PolymatrixGame


def emit_polymatrix(game: Game, pm: PolymatrixGame) -> str:
    """
    ``player <id> <strategies>`` per player, then one ``a <i> <j> <colour>``
    line per 1-entry ``a_ij(colour, colour)``; all other entries are 0.
    """
    out = [f"players {pm.n}"]
    order = sorted(range(pm.n), key=game.external)
    for i in order:
        out.append(f"player {game.external(i)} " + " ".join(game.token(c) for c in pm.strategies[i]))
    rows = sorted((game.external(i), game.external(j), ones) for (i, j), ones in pm.entries.items())
    for i_ext, j_ext, ones in rows:
        out.extend(f"a {i_ext} {j_ext} {game.token(c)}" for c in sorted(ones))
    return "\n".join(out) + "\n"
