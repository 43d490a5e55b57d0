from coordgames.reductions.cnf import CnfFormula, brute_force_sat, random_3cnf
from coordgames.reductions.gadget import (
    RoleMap,
    build_gadget,
    equilibrium_from_assignment,
    extract_assignment,
    sat_to_game,
)
from coordgames.reductions.polymatrix import PolymatrixGame, to_polymatrix
from coordgames.reductions.weights import canonical_extension, expand_weights

__all__ = [
    "CnfFormula",
    "PolymatrixGame",
    "RoleMap",
    "brute_force_sat",
    "build_gadget",
    "canonical_extension",
    "equilibrium_from_assignment",
    "expand_weights",
    "extract_assignment",
    "random_3cnf",
    "sat_to_game",
    "to_polymatrix",
]
