from coordgames.solvers.cycle import CycleState, solve_cycle, solve_cycle_strong, strong_cycle_path
from coordgames.solvers.dag import solve_dag
from coordgames.solvers.dispatch import METHODS, SolveResult, solve
from coordgames.solvers.scc import cycle_component, solve_scc
from coordgames.solvers.structure import (
    SccDecomposition,
    StructureReport,
    classify,
    cycle_order,
    decompose,
    is_colour_complete,
)
from coordgames.solvers.two_colour import solve_two_colour

__all__ = [
    "METHODS",
    "CycleState",
    "SccDecomposition",
    "SolveResult",
    "StructureReport",
    "classify",
    "cycle_component",
    "cycle_order",
    "decompose",
    "is_colour_complete",
    "solve",
    "solve_cycle",
    "solve_cycle_strong",
    "solve_dag",
    "solve_scc",
    "solve_two_colour",
    "strong_cycle_path",
]
