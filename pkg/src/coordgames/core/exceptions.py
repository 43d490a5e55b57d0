from __future__ import annotations


class CoordGameError(RuntimeError):
    """Base error for coordination game tooling."""


class GameInputError(CoordGameError):
    """Invalid node, colouring, permutation or other caller input."""


class GameFormatError(GameInputError):
    def __init__(self, message: str, line_no: int | None = None) -> None:
        self.line_no = line_no
        self.message = message
        super().__init__(f"line {line_no}: {message}" if line_no is not None else message)


class CnfFormatError(GameFormatError):
    pass


class StructureError(CoordGameError):
    """A solver's structural precondition does not hold."""


class BudgetExceededError(CoordGameError):
    def __init__(self, required: int, budget: int, what: str = "colourings") -> None:
        self.required = required
        self.budget = budget
        super().__init__(f"{what}: {required} exceeds state budget {budget}")
