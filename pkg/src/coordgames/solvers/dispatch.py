from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from coordgames.core.exceptions import GameInputError
from coordgames.core.game import Colouring, Game
from coordgames.dynamics.paths import Path
from coordgames.oracle.enumerate import find_first
from coordgames.solvers.cycle import solve_cycle_strong
from coordgames.solvers.dag import solve_dag
from coordgames.solvers.scc import solve_scc
from coordgames.solvers.structure import StructureReport, classify
from coordgames.solvers.two_colour import solve_two_colour
from coordgames.utils.logging import log_json

Method = Literal["auto", "dag", "cycle", "scc", "two-colour", "brute"]
METHODS: tuple[Method, ...] = ("auto", "dag", "cycle", "scc", "two-colour", "brute")


@dataclass(frozen=True)
class SolveResult:
    """``colouring`` is None only for ``brute`` on a game without a strong equilibrium."""

    method: Method
    colouring: Colouring | None
    path: Path | None = None

    @property
    def found(self) -> bool:
        return self.colouring is not None


def pick_method(report: StructureReport) -> Method:
    if report.is_dag:
        return "dag"
    if report.is_single_simple_cycle and report.unit_weights:
        return "cycle"
    if report.all_sccs_simple_cycles and report.unit_weights:
        return "scc"
    if report.uses_at_most_two_colours:
        return "two-colour"
    return "brute"


def solve(
    game: Game,
    method: Method = "auto",
    *,
    start: Colouring | None = None,
    budget: int | None = None,
) -> SolveResult:
    if method not in METHODS:
        raise GameInputError(f"unknown method {method!r}")
    if method == "auto":
        method = pick_method(classify(game))
        log_json("solver_selected", method=method, n=game.n)

    if method == "dag":
        return SolveResult(method, solve_dag(game))
    if method == "cycle":
        return SolveResult(method, solve_cycle_strong(game, start))
    if method == "scc":
        end, path = solve_scc(game, start)
        return SolveResult(method, end, path)
    if method == "two-colour":
        end, path = solve_two_colour(game, start)
        return SolveResult(method, end, path)

    found = find_first(game, "strong", budget=budget)
    log_json("solver_done", method="brute", n=game.n, found=found is not None)
    return SolveResult("brute", found)
