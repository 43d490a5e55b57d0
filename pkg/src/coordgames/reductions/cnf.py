from __future__ import annotations

import random
from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product

from coordgames.core.exceptions import GameInputError

Clause = tuple[int, int, int]


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF over variables 1..num_vars; a literal is a signed variable index."""

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise GameInputError(f"negative variable count {self.num_vars}")
        for clause in self.clauses:
            if len(clause) != 3:
                raise GameInputError(f"clause {clause} does not have exactly 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise GameInputError(f"literal {lit} outside variables 1..{self.num_vars}")

    def evaluate(self, assignment: Mapping[int, bool]) -> bool:
        return all(any(assignment[abs(lit)] == (lit > 0) for lit in clause) for clause in self.clauses)


def brute_force_sat(formula: CnfFormula) -> dict[int, bool] | None:
    """First satisfying assignment in lexicographic order (False before True), or None."""
    for values in product((False, True), repeat=formula.num_vars):
        assignment = dict(enumerate(values, start=1))
        if formula.evaluate(assignment):
            return assignment
    return None


def random_3cnf(num_vars: int, num_clauses: int, rng: random.Random) -> CnfFormula:
    """Literals drawn independently; a clause may repeat a variable."""
    if num_vars < 1:
        raise GameInputError("random formula needs at least one variable")
    clauses = []
    for _ in range(num_clauses):
        lits = tuple(rng.randint(1, num_vars) * rng.choice((1, -1)) for _ in range(3))
        clauses.append(lits)
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))  # type: ignore[arg-type]
