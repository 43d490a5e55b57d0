from coordgames.oracle.enumerate import (
    count_colourings,
    enumerate_colourings,
    exists,
    find_all,
    find_first,
    iter_equilibria,
    parse_kind,
)
from coordgames.oracle.gadgets import verify_no_ne_gadget

__all__ = [
    "count_colourings",
    "enumerate_colourings",
    "exists",
    "find_all",
    "find_first",
    "iter_equilibria",
    "parse_kind",
    "verify_no_ne_gadget",
]
