from coordgames.dynamics.paths import Path, Scheduler, format_step, run_path, trace_lines
from coordgames.dynamics.potential import TopologicalOrder, lex_potential, topological_order

__all__ = [
    "Path",
    "Scheduler",
    "TopologicalOrder",
    "format_step",
    "lex_potential",
    "run_path",
    "topological_order",
    "trace_lines",
]
