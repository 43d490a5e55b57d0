from __future__ import annotations

from coordgames.core.exceptions import CnfFormatError, GameInputError
from coordgames.reductions.cnf import CnfFormula


def parse_dimacs(text: str) -> CnfFormula:
    """
    DIMACS CNF with clauses of width exactly 3. ``c`` lines are comments, a
    single ``p cnf <vars> <clauses>`` header must precede the clauses, clauses
    may span lines and end at ``0``, and a ``%`` line ends the input.
    """
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    pending_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise CnfFormatError("second problem line", line_no)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfFormatError(f"malformed header {line!r}", line_no)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfFormatError(f"malformed header {line!r}", line_no) from None
            if header[0] < 0 or header[1] < 0:
                raise CnfFormatError(f"malformed header {line!r}", line_no)
            continue
        if header is None:
            raise CnfFormatError("clause before the 'p cnf' header", line_no)

        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfFormatError(f"bad literal {tok!r}", line_no) from None
            if not pending:
                pending_line = line_no
            if lit == 0:
                if len(pending) != 3:
                    raise CnfFormatError(f"clause of width {len(pending)}, expected 3", pending_line)
                clauses.append(tuple(pending))
                pending = []
                continue
            if abs(lit) > header[0]:
                raise CnfFormatError(f"literal {lit} outside variables 1..{header[0]}", line_no)
            pending.append(lit)

    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    if pending:
        raise CnfFormatError("last clause is not terminated by 0", pending_line)
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header declares {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfFormula(num_vars=header[0], clauses=tuple(clauses))  # type: ignore[arg-type]
    except GameInputError as exc:
        raise CnfFormatError(str(exc)) from None


def emit_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.num_vars} {len(formula.clauses)}"]
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"
