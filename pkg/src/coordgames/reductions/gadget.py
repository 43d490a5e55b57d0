from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass, field

import networkx as nx

from coordgames.core.equilibria import is_nash
from coordgames.core.exceptions import GameFormatError, GameInputError
from coordgames.core.game import Colouring, Game, GameBuilder, colour_scores
from coordgames.reductions.cnf import CnfFormula
from coordgames.utils.logging import log_json

TRUE, FALSE = "T", "F"
PALETTE = (TRUE, FALSE, "R", "G", "B")

# Gadget roles in id order: core triangle, relays, leaves.
ROLES = ("A", "B", "C", "RG", "RB", "GB", "LR", "LB", "LG")
CORE = ("A", "B", "C")
VARIABLE_ROLE = "X"
GADGET_SIZE = len(ROLES)
VARIABLE_WEIGHT = 4

_ROLE_LINE = re.compile(r"^#\s*role\s+(\d+)\s+([A-Z]+)\s+(\d+)\s*$")


def literal_colour(positive: bool) -> str:
    return TRUE if positive else FALSE


def _gadget_sets(x: bool, y: bool, z: bool) -> dict[str, tuple[str, ...]]:
    return {
        "A": ("R", "G", literal_colour(x)),
        "B": ("R", "B", literal_colour(y)),
        "C": ("G", "B", literal_colour(z)),
        "RG": ("R", "G"),
        "RB": ("R", "B"),
        "GB": ("G", "B"),
        "LR": ("R",),
        "LB": ("B",),
        "LG": ("G",),
    }


# (src role, dst role, weight)
_GADGET_EDGES = (
    ("A", "B", 1), ("B", "C", 1), ("C", "A", 1),
    ("A", "RG", 1), ("B", "RB", 1), ("C", "GB", 1),
    ("RG", "B", 2), ("RB", "C", 2), ("GB", "A", 2),
    ("LR", "A", 2), ("LB", "B", 2), ("LG", "C", 2),
)


def add_gadget(builder: GameBuilder, base_id: int, x: bool, y: bool, z: bool) -> dict[str, int]:
    """Wire one no-equilibrium gadget on ids ``base_id + 1 .. base_id + 9``."""
    ids = {role: base_id + r + 1 for r, role in enumerate(ROLES)}
    for role, tokens in _gadget_sets(x, y, z).items():
        builder.set_colours(ids[role], tokens)
    for src, dst, w in _GADGET_EDGES:
        builder.add_edge(ids[src], ids[dst], w)
    return ids


def build_gadget(i: int, x: bool, y: bool, z: bool) -> tuple[Game, dict[str, int]]:
    """Standalone gadget number ``i`` (1-based), ids ``9(i-1)+1 .. 9i``."""
    if i < 1:
        raise GameInputError(f"gadget index must be positive, got {i}")
    builder = GameBuilder(PALETTE)
    ids = add_gadget(builder, GADGET_SIZE * (i - 1), x, y, z)
    return builder.build(), ids


@dataclass(frozen=True)
class RoleMap:
    """External ids of the variable nodes and of every gadget's role nodes."""

    variables: Mapping[int, int] = field(default_factory=dict)
    gadgets: tuple[Mapping[str, int], ...] = ()

    def lines(self) -> list[str]:
        out = [f"# role {ext} {VARIABLE_ROLE} {j}" for j, ext in sorted(self.variables.items())]
        for i, ids in enumerate(self.gadgets, start=1):
            out.extend(f"# role {ids[role]} {role} {i}" for role in ROLES if role in ids)
        return out

    @classmethod
    def parse(cls, text: str) -> RoleMap:
        variables: dict[int, int] = {}
        gadgets: dict[int, dict[str, int]] = {}
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line.startswith("#") or "role" not in line:
                continue
            m = _ROLE_LINE.match(line)
            if m is None:
                continue
            ext, role, index = int(m.group(1)), m.group(2), int(m.group(3))
            if role == VARIABLE_ROLE:
                variables[index] = ext
            elif role in ROLES:
                gadgets.setdefault(index, {})[role] = ext
            else:
                raise GameFormatError(f"unknown role {role!r}", line_no)
        if gadgets and sorted(gadgets) != list(range(1, len(gadgets) + 1)):
            raise GameFormatError("gadget indices are not 1..k")
        return cls(variables=variables, gadgets=tuple(gadgets[i] for i in sorted(gadgets)))

    def __bool__(self) -> bool:
        return bool(self.variables) or bool(self.gadgets)


def sat_to_game(formula: CnfFormula) -> tuple[Game, RoleMap]:
    """
    Weighted game that has a Nash equilibrium iff ``formula`` is satisfiable.
    Variable ``j`` is node ``j`` with colours {T, F}; clause ``i`` gets a
    gadget on ids ``n + 9(i-1) + 1 ..`` and each literal feeds its core node
    with a weight-4 edge from the variable node.
    """
    n = formula.num_vars
    builder = GameBuilder(PALETTE)
    variables = {}
    for j in range(1, n + 1):
        builder.set_colours(j, (TRUE, FALSE))
        variables[j] = j

    gadgets = []
    for i, clause in enumerate(formula.clauses, start=1):
        a, b, c = clause
        ids = add_gadget(builder, n + GADGET_SIZE * (i - 1), a > 0, b > 0, c > 0)
        for lit, role in zip(clause, CORE, strict=True):
            builder.add_edge(abs(lit), ids[role], VARIABLE_WEIGHT)
        gadgets.append(ids)

    game = builder.build()
    log_json("reduction_built", variables=n, clauses=len(formula.clauses), nodes=game.n, edges=game.edge_count)
    return game, RoleMap(variables=variables, gadgets=tuple(gadgets))


def extract_assignment(game: Game, roles: RoleMap, s: Colouring) -> dict[int, bool]:
    """Truth assignment read off the variable nodes of a Nash equilibrium."""
    if not is_nash(game, s):
        raise GameInputError("colouring is not a Nash equilibrium; no assignment guarantee")
    if not roles.variables:
        raise GameInputError("role map names no variable nodes")
    return {j: game.token(s[game.node(ext)]) == TRUE for j, ext in sorted(roles.variables.items())}


def equilibrium_from_assignment(game: Game, roles: RoleMap, assignment: Mapping[int, bool]) -> Colouring:
    """
    Nash equilibrium of a reduced game built from a satisfying assignment.

    Variable nodes play their truth value and every core node fed by a true
    literal copies it. Without those nodes each gadget is acyclic, so the
    rest is coloured in topological order with lowest-id best responses.
    """
    colours = [cs[0] for cs in game.colour_sets]
    fixed: set[int] = set()
    for j, ext in roles.variables.items():
        if j not in assignment:
            raise GameInputError(f"assignment has no value for x{j}")
        i = game.node(ext)
        colours[i] = game.colour(literal_colour(assignment[j]))
        fixed.add(i)

    variable_nodes = set(fixed)
    for index, ids in enumerate(roles.gadgets, start=1):
        satisfied = False
        for role in CORE:
            i = game.node(ids[role])
            for src, w in game.in_edges[i]:
                if src in variable_nodes and w == VARIABLE_WEIGHT and colours[src] in game.colour_lookup[i]:
                    colours[i] = colours[src]
                    fixed.add(i)
                    satisfied = True
        if not satisfied:
            raise GameInputError(f"assignment leaves clause {index} unsatisfied")

    residual = game.digraph.subgraph(i for i in range(game.n) if i not in fixed)
    try:
        order = list(nx.lexicographical_topological_sort(residual))
    except nx.NetworkXUnfeasible:
        raise GameInputError("residual graph is not acyclic; role map does not match the game") from None
    for i in order:
        scores = colour_scores(game, colours, i)
        best = max(scores.values())
        colours[i] = next(c for c in game.colour_sets[i] if scores[c] == best)

    s = Colouring(tuple(colours))
    if not is_nash(game, s):
        raise GameInputError("completed colouring is not a Nash equilibrium; role map does not match the game")
    log_json("reduction_completed", nodes=game.n, fixed=len(fixed))
    return s
