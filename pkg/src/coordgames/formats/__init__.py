from coordgames.formats.dimacs import emit_dimacs, parse_dimacs
from coordgames.formats.game_file import emit_colouring, emit_dot, emit_game, parse_colouring, parse_game
from coordgames.formats.polymatrix_file import emit_polymatrix

__all__ = [
    "emit_colouring",
    "emit_dimacs",
    "emit_dot",
    "emit_game",
    "emit_polymatrix",
    "parse_colouring",
    "parse_dimacs",
    "parse_game",
]
